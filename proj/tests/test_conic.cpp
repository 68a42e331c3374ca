#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "k3mw/conic.hpp"

#include <random>

using namespace k3mw;

TEST_CASE("Hilbert symbols") {
    // (-1,-1) fails at the real place and at 2
    CHECK(hilbert_symbol(-1, -1, 0) == -1);
    CHECK(hilbert_symbol(-1, -1, 2) == -1);
    CHECK(hilbert_symbol(-1, -1, 3) == 1);
    // (2, 7)_7: 2 is a QR mod 7
    CHECK(hilbert_symbol(2, 7, 7) == 1);
    // (3, 7)_7: 3 is not a QR mod 7
    CHECK(hilbert_symbol(3, 7, 7) == -1);
    // symmetry
    std::mt19937 rng(5);
    std::uniform_int_distribution<long long> v(-50, 50);
    for (int i = 0; i < 500; ++i) {
        BigInt a = v(rng), b = v(rng);
        if (a == 0 || b == 0) continue;
        for (BigInt p : {BigInt(0), BigInt(2), BigInt(3), BigInt(5), BigInt(7)})
            CHECK(hilbert_symbol(a, b, p) == hilbert_symbol(b, a, p));
    }
}

TEST_CASE("bisection conic of Example 1") {
    auto r = conic_point(2, 8, -1);
    REQUIRE(r.soluble);
    CHECK(r.point[0] == 2);
    CHECK(r.point[1] == 1);
    CHECK(r.point[2] == 4);
}

TEST_CASE("bisection conic of Example 2 is insoluble at the real place") {
    auto r = conic_point(-5, -6, -1);
    CHECK(!r.soluble);
    REQUIRE(r.obstruction.has_value());
    CHECK(*r.obstruction == "real");
}

TEST_CASE("trivial split case") {
    auto r = conic_point(1, -1, -1);
    REQUIRE(r.soluble);
    // first point in the deterministic shell order is (1:0:1)
    CHECK(r.point[0] == 1);
    CHECK(r.point[1] == 0);
    CHECK(r.point[2] == 1);
}

TEST_CASE("rational coefficients are scaled away") {
    auto r = conic_point(Rational(1, 2), Rational(2), Rational(-1, 4));
    REQUIRE(r.soluble);
    BigInt x = r.point[0], y = r.point[1], z = r.point[2];
    // 1/2 x^2 + 2 y^2 - 1/4 z^2 = 0 <=> 2x^2 + 8y^2 - z^2 = 0
    CHECK(2 * x * x + 8 * y * y - z * z == 0);
}

TEST_CASE("product formula and point validity (randomized)") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<long long> v(-60, 60);
    int solved = 0;
    for (int i = 0; i < 400; ++i) {
        long long a = v(rng), b = v(rng), c = v(rng);
        if (!a || !b || !c) continue;
        auto r = conic_point(a, b, c);
        int prod = 1;
        for (const auto& s : r.symbols) prod *= s.symbol;
        CHECK(prod == 1);
        if (r.soluble) {
            ++solved;
            CHECK(a * r.point[0] * r.point[0] + b * r.point[1] * r.point[1] +
                      c * r.point[2] * r.point[2] ==
                  0);
            BigInt g = big_gcd(big_gcd(r.point[0], r.point[1]), r.point[2]);
            CHECK(g == 1);
        } else {
            CHECK(r.obstruction.has_value());
        }
    }
    CHECK(solved > 20); // sanity: a decent fraction should be soluble
}

TEST_CASE("zero coefficients are rejected") {
    CHECK_THROWS_AS(conic_point(0, 1, 1), std::domain_error);
}

#include "k3mw/report_json.hpp"

TEST_CASE("ConicResult JSON round trip") {
    for (auto coeffs : std::vector<std::array<long long, 3>>{{2, 8, -1}, {-5, -6, -1}, {3, 5, -2}}) {
        auto r = conic_point(coeffs[0], coeffs[1], coeffs[2]);
        auto j = to_json(r);
        auto r2 = conic_result_from_json(j);
        CHECK(to_json(r2) == j);
    }
}
