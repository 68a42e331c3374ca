#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace k3mw {

using Int = long long;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline BigInt big_gcd(BigInt a, BigInt b) { return boost::multiprecision::gcd(a, b); }

// Floor-mod with result in [0, m) for m > 0.
inline Int mod_floor(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

inline BigInt pow_big(BigInt base, unsigned e) {
    BigInt r = 1;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

inline BigInt isqrt_big(const BigInt& n) {
    if (n < 0) throw std::domain_error("isqrt of negative");
    return boost::multiprecision::sqrt(n);
}

// Squarefree part: n = s * m^2 with s squarefree; returns s (sign preserved).
// Intended for desk-scale inputs; factors by trial division.
inline BigInt squarefree_part(BigInt n) {
    if (n == 0) return 0;
    BigInt s = n < 0 ? -1 : 1;
    n = boost::multiprecision::abs(n);
    for (BigInt p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) { n /= p; ++e; }
            if (e & 1) s *= p;
        }
    }
    return s * n;
}

} // namespace k3mw
