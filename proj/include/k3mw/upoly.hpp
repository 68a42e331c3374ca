#pragma once

#include "k3mw/numeric.hpp"

#include <string>
#include <vector>

namespace k3mw {

// Dense univariate polynomial over Q. Coefficient i belongs to t^i; no
// trailing zeros are stored.
struct UPoly {
    std::vector<Rational> c;

    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }
    static UPoly constant(const Rational& a) { return UPoly({a}); }
    static UPoly x() { return UPoly({Rational(0), Rational(1)}); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int deg() const { return (int)c.size() - 1; }
    Rational lc() const { return c.empty() ? Rational(0) : c.back(); }
    Rational at(int i) const { return i >= 0 && i < (int)c.size() ? c[i] : Rational(0); }

    bool operator==(const UPoly& o) const { return c == o.c; }

    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    UPoly operator*(const Rational& k) const;
    UPoly operator-() const { return *this * Rational(-1); }

    UPoly monic() const;
    UPoly derivative() const;
    Rational eval(const Rational& v) const;
    UPoly shift_up(int k) const; // multiply by t^k
    UPoly reversed(int target_deg) const; // t^target_deg * p(1/t)

    std::string str(const std::string& var = "t") const;
};

// Quotient/remainder with exact rational arithmetic.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
UPoly divexact(const UPoly& a, const UPoly& b); // throws if remainder nonzero

// Monic gcd computed through a primitive PRS over Z.
UPoly gcd(const UPoly& a, const UPoly& b);

// Yun squarefree decomposition: f = lc * prod f_i^i with f_i monic squarefree
// pairwise coprime. Returns the list (f_i, i) skipping trivial f_i = 1.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f);

// Multiplicity of the (nonconstant) factor g in f by repeated exact division.
int multiplicity_of(const UPoly& f, const UPoly& g);

// Integer image: primitive integer coefficients and the rational content,
// f = content * primitive.
struct ZPrimitive {
    Rational content;
    std::vector<BigInt> p; // primitive, positive leading coefficient
};
ZPrimitive to_primitive(const UPoly& f);
UPoly from_z(const std::vector<BigInt>& zp);

} // namespace k3mw
