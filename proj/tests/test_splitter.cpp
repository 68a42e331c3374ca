#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3mw/family.hpp"
#include "k3mw/splitter.hpp"

using namespace k3mw;

TEST_CASE("enumerate_sections on the stated presets") {
    auto L5 = preset_lambda(5);
    auto s0 = enumerate_sections(L5, 0);
    REQUIRE(s0.size() == 1);
    CHECK(s0[0] == L5.zero_section);

    auto s5 = enumerate_sections(L5, 5);
    REQUIRE(s5.size() == 3);
    CHECK(s5[0] == L5.zero_section);
    CHECK(s5[1].c[2] == 1);
    CHECK(s5[2].c[2] == -1);

    auto A = preset_case_a(5, 0, 1); // Lambda_5 + <-2>
    auto s1 = enumerate_sections(A, 1);
    REQUIRE(s1.size() == 3);
    CHECK(s1[0].c[2] == 0);
    CHECK(s1[0].c[3] == 0);
    CHECK(s1[1].c[3] == 1);
    CHECK(s1[2].c[3] == -1);
}

TEST_CASE("d=3: the bisection class splits into {O, S_1}") {
    auto p = preset_lambda(3);
    auto B = DivisorClass::of(p.lat, {3, 2, 1});
    auto v = split_check(p, B);
    REQUIRE(v.decomposed);
    CHECK(v.decomposition->fiber_multiple == 0);
    REQUIRE(v.decomposition->sections.size() == 2);
    CHECK(v.decomposition->sections[0].a == 0);
    CHECK(v.decomposition->sections[1].a == 1);
    CHECK(decomposition_reassembles(p, *v.decomposition, B));
}

TEST_CASE("d=5: the bisection class is irreducible by the test") {
    auto p = preset_lambda(5);
    auto B = DivisorClass::of(p.lat, {4, 2, 1});
    auto v = split_check(p, B);
    CHECK(!v.decomposed);
}

TEST_CASE("monotone obstruction across odd d") {
    for (Int d = 5; d <= 29; d += 2) {
        auto p = preset_lambda(d);
        auto B = bisection_class(d);
        auto Bp = DivisorClass::of(p.lat, {B.c[0], B.c[1], B.c[2]});
        CHECK(!split_check(p, Bp).decomposed);
    }
    {
        auto p = preset_lambda(3);
        CHECK(split_check(p, DivisorClass::of(p.lat, {3, 2, 1})).decomposed);
    }
}

TEST_CASE("U + <-4> + <-6>: B_{k,h} splits as two sections") {
    auto p = preset_case_a(2, 0, 3);
    for (Int k = -3; k <= 3; ++k)
        for (Int h = -3; h <= 3; ++h) {
            Int a = 4 * k * k + 6 * (h * h + h) + 3;
            auto B = DivisorClass::of(p.lat, {a, 2, 2 * k, 2 * h + 1});
            auto v = split_check(p, B);
            REQUIRE(v.decomposed);
            REQUIRE(v.decomposition->sections.size() == 2);
            CHECK(v.decomposition->fiber_multiple == 0);
            // the two sections are P_{k,h} and P_{k,h+1}
            auto s0 = v.decomposition->sections[0], s1 = v.decomposition->sections[1];
            bool match = (s0 == SectionIndex{k, h} && s1 == SectionIndex{k, h + 1}) ||
                         (s0 == SectionIndex{k, h + 1} && s1 == SectionIndex{k, h});
            CHECK(match);
        }
    // (k,h) = (0,0): sections P_{0,0} and P_{0,1}
    auto B00 = DivisorClass::of(p.lat, {3, 2, 0, 1});
    auto v = split_check(p, B00);
    REQUIRE(v.decomposed);
    CHECK(v.decomposition->sections[0] == SectionIndex{0, 0});
    CHECK(v.decomposition->sections[1] == SectionIndex{0, 1});
}

TEST_CASE("Lambda_d + <-2c> irreducibility for d = 3 mod 4") {
    for (Int d : {7, 11, 15, 19, 23}) {
        for (Int c = 1; c <= 10; ++c) {
            auto p = preset_lambda_plus(d, c);
            auto B = DivisorClass::of(p.lat, {(d + 3) / 2, 2, 1, 0});
            CHECK(!split_check(p, B).decomposed);
        }
    }
}

TEST_CASE("split preconditions") {
    auto p = preset_lambda(5);
    CHECK_THROWS_AS(split_check(p, DivisorClass::of(p.lat, {1, 1, 0})), std::domain_error);
    CHECK_THROWS_AS(split_check(p, DivisorClass::of(p.lat, {1, 2, 0})), std::domain_error);
}

TEST_CASE("oracle equivalence on rank-3 presets") {
    // all candidate classes with F-coefficient <= 40 (trimmed sweep here; the
    // acceptance suite runs the full d <= 30 version)
    for (Int d : {1, 2, 3, 5, 8, 13}) {
        auto p = preset_lambda(d);
        for (Int b = 2; b <= 4; ++b)
            for (Int c = -4; c <= 4; ++c)
                for (Int sq : {-2, 0}) {
                    Int num = sq / 2 + b * b + d * c * c; // a*b = B^2/2 + b^2 + d c^2
                    if (num % b != 0) continue;
                    Int a = num / b;
                    if (a < 0 || a > 40) continue;
                    auto B = DivisorClass::of(p.lat, {a, b, c});
                    if (self_pairing(B) != sq) continue; // construction sanity
                    auto v1 = split_check(p, B);
                    auto v2 = split_check_brute(p, B, 40);
                    CHECK(v1.decomposed == v2.decomposed);
                    if (v1.decomposed)
                        CHECK(decomposition_reassembles(p, *v1.decomposition, B));
                    if (v2.decomposed)
                        CHECK(decomposition_reassembles(p, *v2.decomposition, B));
                }
    }
}

TEST_CASE("Table-1 audit verdicts") {
    auto audit = table1_audit();
    REQUIRE(audit.size() == 12);
    for (int i = 0; i < 6; ++i) CHECK(audit[i].verdict == "IRREDUCIBLE_BY_TEST");
    CHECK(audit[6].verdict == "TRIVIAL_MW");
    CHECK(audit[7].verdict == "TRIVIAL_MW");
    CHECK(audit[8].verdict == "NO_ODD_CLASS");
    CHECK(audit[9].verdict == "DECOMPOSES");
    CHECK(audit[10].verdict == "UNDECIDED");
    CHECK(audit[11].verdict == "UNDECIDED");

    // the gamma=5 case with B = 4F + 2O - b4
    CHECK(audit[3].lattice_name == "U+[[-2,-1],[-1,-10]]");
    CHECK(audit[3].class_coeffs == std::vector<Int>{4, 2, 0, -1});
}

TEST_CASE("case-b parity formulas pass their preflight") {
    for (Int g : {2, 3, 5}) {
        auto p = preset_case_b_split(g);
        auto secs = enumerate_sections(p, 60); // throws if S^2 != -2 or S.F != 1
        CHECK(secs.size() >= 5);
    }
}

TEST_CASE("non-positive-definite presets are rejected") {
    auto p = preset_case_a(1, 5, 1); // 4*1*1 - 25 < 0
    CHECK_THROWS_AS(enumerate_sections(p, 5), std::invalid_argument);
    auto B = DivisorClass::of(p.lat, {4, 2, 1, 0});
    CHECK_THROWS_AS(split_check(p, B), std::invalid_argument);
}
