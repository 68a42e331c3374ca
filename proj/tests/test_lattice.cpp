#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3mw/isometry.hpp"
#include "k3mw/lattice.hpp"

#include <random>

using namespace k3mw;

TEST_CASE("named lattice constructors") {
    auto U = lattices::U();
    CHECK(U.g[0][0] == 0);
    CHECK(U.g[0][1] == 1);
    CHECK(U.g[1][0] == 1);
    CHECK(U.g[1][1] == 0);

    auto L5 = lattices::lambda(5);
    CHECK(L5.rank == 3);
    CHECK(L5.g[2][2] == -10);
    CHECK(L5.g[0][1] == 1);
    CHECK(L5.g[1][1] == 0);

    auto P1 = lattices::phi(1);
    CHECK(P1.g[0][2] == 2);
    CHECK(P1.g[1][1] == -2);
    CHECK(P1.g[1][2] == 1);
    CHECK(P1.g[2][2] == -2);

    CHECK_THROWS_AS(lattices::direct_sum(lattices::lambda(2), lattices::U()),
                    std::domain_error);
}

TEST_CASE("descriptor round trips") {
    for (const char* d : {"U", "U(2)", "L(7)", "G(2,1)", "<-4>+<-6>", "Phi(3)", "PhiG1(0)"}) {
        auto L = parse_descriptor(d);
        CHECK(parse_descriptor(print_descriptor(L)) == L);
    }
    auto S = parse_descriptor("<-4>+<-6>+U");
    CHECK(S.rank == 4);
    CHECK(S.g[0][0] == -4);
    CHECK(S.g[1][1] == -6);
    CHECK(S.g[2][3] == 1);
    CHECK_THROWS(parse_descriptor("L(7"));
    CHECK_THROWS(parse_descriptor("<-3>"));
}

TEST_CASE("pairing on worked examples") {
    auto L5 = lattices::lambda(5);
    auto F = DivisorClass::of(L5, {1, 0, 0});
    auto O = DivisorClass::of(L5, {-1, 1, 0}); // u2 - u1
    CHECK(pair_value(F, O) == 1);
    CHECK(self_pairing(O) == -2);
    CHECK(self_pairing(DivisorClass::zero(L5)) == 0);

    // {H, L0, L1}: H^2=4, H.Li=1, Li^2=-2, L0.L1=0; D = 6H - 7L0 + 3L1
    auto HL = make_from_rows({{4, 1, 1}, {1, -2, 0}, {1, 0, -2}});
    auto D = DivisorClass::of(HL, {6, -7, 3});
    CHECK(self_pairing(D) == -20);
    CHECK(pair_value(D, DivisorClass::of(HL, {1, -1, 0})) == 0);
    CHECK(pair_value(D, DivisorClass::of(HL, {0, 0, 1})) == 0);
}

TEST_CASE("genus by adjunction") {
    auto L7 = lattices::lambda(7);
    CHECK(genus(DivisorClass::of(L7, {1, 0, 0})) == 1); // F
    auto UO = make_from_rows({{0, 1}, {1, -2}});        // basis {F, O}
    CHECK(genus(DivisorClass::of(UO, {0, 1})) == 0);    // O
    for (Int a = 2; a <= 6; ++a)
        for (Int m = 2; m <= 4; ++m) {
            auto M = DivisorClass::of(UO, {a, m});
            if (self_pairing(M) >= -2) CHECK(genus(M) == a * m - m * m + 1);
        }
    CHECK_THROWS_AS(genus(DivisorClass::of(L7, {0, 0, 1})), std::domain_error);
}

TEST_CASE("signature") {
    auto s = signature(lattices::lambda(7));
    CHECK(s == Signature{1, 2, 0});
    CHECK(signature(lattices::U_scaled(2)) == Signature{1, 1, 0});
    CHECK(signature(make_from_rows({{0}})) == Signature{0, 0, 1});
    CHECK(signature(lattices::U()) == Signature{1, 1, 0});
    for (Int b = 1; b <= 4; ++b)
        for (Int c = 0; c < b; ++c)
            CHECK(signature(lattices::gamma(b, c)) == Signature{1, 1, 0});
    for (Int x = 0; x <= 5; ++x) CHECK(signature(lattices::phi(x)) == Signature{1, 2, 0});
}

TEST_CASE("canonical Gamma_{b,c}") {
    CHECK(canonical_gamma(2, 5) == std::pair<Int, Int>{2, 1});
    CHECK(canonical_gamma(2, -1) == std::pair<Int, Int>{2, 1});
    CHECK(canonical_gamma(3, 0) == std::pair<Int, Int>{3, 0});
    CHECK(gamma_c_shifted_range(2, 1) == -1);
    CHECK(gamma_c_shifted_range(3, 1) == 1);
    CHECK_THROWS_AS(canonical_gamma(0, 1), std::domain_error);
}

TEST_CASE("isometry witnesses") {
    auto id = isometry_witness(lattices::lambda(3), lattices::lambda(3), 1);
    REQUIRE(id.has_value());
    CHECK(det(*id) == 1);

    // Phi_0 onto Lambda_5 via the closed-form base change
    auto W = isometry_witness(lattices::phi(0), lattices::lambda(5), 0);
    REQUIRE(W.has_value());
    CHECK(verify_witness(*W, lattices::phi(0), lattices::lambda(5)));
    CHECK(W->at(0, 2) == -4);
    CHECK(W->at(1, 2) == -2);
    CHECK(W->at(2, 2) == 1);

    // Gamma_{2,1} onto [[0,2],[2,-2]]
    auto FB = make_from_rows({{0, 2}, {2, -2}});
    auto W2 = isometry_witness(lattices::gamma(2, 1), FB, 0);
    REQUIRE(W2.has_value());
    CHECK(verify_witness(*W2, lattices::gamma(2, 1), FB));

    // the bounded search finds small 2x2 rebasings
    auto src = make_from_rows({{-6, -1}, {-1, -6}});
    auto dst = make_from_rows({{-10, -5}, {-5, -6}});
    auto W3 = isometry_witness(src, dst, 2);
    REQUIRE(W3.has_value());
    CHECK(verify_witness(*W3, src, dst));

    CHECK(!isometry_witness(lattices::U(), lattices::U_scaled(2), 3).has_value());
    CHECK_THROWS_AS(isometry_witness(lattices::U(), lattices::lambda(2), 2),
                    std::invalid_argument);
}

TEST_CASE("closed-form table across the stated ranges") {
    for (Int x = 0; x <= 50; ++x) {
        auto W = isometry_witness(lattices::phi(x), lattices::lambda(2 * x + 5), 0);
        REQUIRE(W.has_value());
        CHECK(verify_witness(*W, lattices::phi(x), lattices::lambda(2 * x + 5)));
        auto W1 = isometry_witness(lattices::phi_genus1(x), lattices::lambda(2 * x + 4), 0);
        REQUIRE(W1.has_value());
        CHECK(verify_witness(*W1, lattices::phi_genus1(x), lattices::lambda(2 * x + 4)));
    }
    for (Int m = 2; m <= 5; ++m)
        for (Int x = 0; x <= 10; ++x) {
            auto S0 = lattices::multisection_span(m, x, 0);
            auto W = isometry_witness(S0, lattices::lambda(m * m + m * x + 1), 0);
            REQUIRE(W.has_value());
            CHECK(verify_witness(*W, S0, lattices::lambda(m * m + m * x + 1)));
            auto S1 = lattices::multisection_span(m, x, 1);
            auto W1 = isometry_witness(S1, lattices::lambda(m * m + m * x), 0);
            REQUIRE(W1.has_value());
            CHECK(verify_witness(*W1, S1, lattices::lambda(m * m + m * x)));
        }
}

TEST_CASE("pairing is symmetric and bilinear (randomized)") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<Int> coef(-9, 9), dd(1, 9);
    for (int iter = 0; iter < 3000; ++iter) {
        auto L = lattices::lambda(dd(rng));
        auto rnd = [&] {
            return DivisorClass::of(L, {coef(rng), coef(rng), coef(rng)});
        };
        auto v = rnd(), w = rnd(), u = rnd();
        Int a = coef(rng), b = coef(rng);
        CHECK(pair_value(v, w) == pair_value(w, v));
        CHECK(pair_value(v * a + w * b, u) == a * pair_value(v, u) + b * pair_value(w, u));
        Int sp = self_pairing(v);
        CHECK(sp % 2 == 0); // even lattice
    }
}

TEST_CASE("descriptor sums beyond rank 4 are rejected") {
    CHECK_THROWS_AS(parse_descriptor("U+U+U"), std::domain_error);
    CHECK_THROWS_AS(parse_descriptor("L(5)+U"), std::domain_error);
}

TEST_CASE("Gamma_{b,c} residue classes are isometric") {
    for (Int b = 2; b <= 4; ++b)
        for (Int c = 0; c < b; ++c)
            for (Int k = 1; k <= 2; ++k) {
                auto W = isometry_witness(lattices::gamma(b, c), lattices::gamma(b, c + k * b),
                                          k + 1);
                REQUIRE(W.has_value());
                CHECK(verify_witness(*W, lattices::gamma(b, c), lattices::gamma(b, c + k * b)));
            }
}
