#pragma once

#include "k3mw/poly.hpp"

#include <cstdint>
#include <vector>

namespace k3mw {

// F_{p^n} for odd p, with exp/log tables for O(1) multiplication and
// quadratic character. Elements are indices in [0, q): the base-p digit
// expansion encodes the residue polynomial.
class FieldTower {
public:
    FieldTower(long long p, int n);

    long long p() const { return p_; }
    int n() const { return n_; }
    long long q() const { return q_; }
    const std::vector<long long>& modulus() const { return modulus_; }

    long long add(long long a, long long b) const;
    long long sub(long long a, long long b) const;
    long long mul(long long a, long long b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[(log_[a] + log_[b]) % (q_ - 1)];
    }
    long long pow_elt(long long a, long long e) const;
    long long from_base(long long residue) const { return ((residue % p_) + p_) % p_; }

    // quadratic character: 0 on 0, +1 on squares, -1 otherwise
    int chi(long long a) const {
        if (a == 0) return 0;
        return (log_[a] & 1) ? -1 : 1;
    }

    // embed an F_p coefficient and reduce a rational coefficient mod p
    long long reduce_rational(const Rational& r) const;

private:
    long long p_;
    int n_;
    long long q_;
    std::vector<long long> modulus_; // monic, degree n, coefficients in [0,p)
    std::vector<int32_t> log_;
    std::vector<int64_t> exp_;

    long long mul_slow(long long a, long long b) const;
};

// First monic irreducible polynomial of degree n over F_p in lexicographic
// order of the coefficient vector (c_0, ..., c_{n-1}); irreducibility by
// gcd(x^{p^k} - x, m) = 1 for k <= n/2.
std::vector<long long> find_irreducible_modulus(long long p, int n);

// A multivariate polynomial with coefficients reduced into the tower's prime
// field, as (coefficient, exponent-vector) pairs ready for evaluation.
struct ReducedPoly {
    std::vector<std::pair<long long, ExpVec>> terms;
    int nvars = 0;
};

// Throws std::domain_error when p divides a denominator.
ReducedPoly reduce_poly(const Polynomial& f, long long p);

} // namespace k3mw
