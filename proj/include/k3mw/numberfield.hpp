#pragma once

#include "k3mw/upoly.hpp"

#include <memory>
#include <string>
#include <vector>

namespace k3mw {

// Q[t]/(m) with m monic irreducible. Irreducibility is certified by the
// factorization routine at construction.
class NumberField {
public:
    explicit NumberField(UPoly modulus, bool certify = true);

    const UPoly& modulus() const { return m_; }
    int degree() const { return m_.deg(); }

private:
    UPoly m_;
};

using NumberFieldPtr = std::shared_ptr<const NumberField>;

NumberFieldPtr make_field(UPoly modulus, bool certify = true);

// Residue class in a NumberField; value has degree < deg(modulus).
struct NFElt {
    NumberFieldPtr K;
    UPoly v;

    bool is_zero() const { return v.is_zero(); }
    bool operator==(const NFElt& o) const { return v == o.v; }
};

NFElt nf_make(const NumberFieldPtr& K, const UPoly& raw);
NFElt nf_from_rational(const NumberFieldPtr& K, const Rational& r);
NFElt nf_generator(const NumberFieldPtr& K); // class of t

NFElt operator+(const NFElt& a, const NFElt& b);
NFElt operator-(const NFElt& a, const NFElt& b);
NFElt operator*(const NFElt& a, const NFElt& b);
NFElt nf_neg(const NFElt& a);
NFElt nf_inv(const NFElt& a); // extended Euclid; throws on zero
NFElt nf_scale(const NFElt& a, const Rational& r);

// Evaluate a rational polynomial at an element of K.
NFElt nf_eval_upoly(const UPoly& f, const NFElt& a);

std::string nf_str(const NFElt& a, const std::string& var = "s");

// Dense polynomial over a number field K, used for gcd patterns of small
// polynomials (fiber typing, tangency checks).
struct KPoly {
    NumberFieldPtr K;
    std::vector<NFElt> c;

    void trim();
    bool is_zero() const { return c.empty(); }
    int deg() const { return (int)c.size() - 1; }
    const NFElt& lc() const { return c.back(); }
};

KPoly kp_make(const NumberFieldPtr& K, std::vector<NFElt> coeffs);
KPoly kp_from_upoly_coeffs(const NumberFieldPtr& K, const std::vector<UPoly>& coeffs);
KPoly kp_monic(const KPoly& a);
KPoly kp_mul(const KPoly& a, const KPoly& b);
KPoly kp_sub(const KPoly& a, const KPoly& b);
std::pair<KPoly, KPoly> kp_divmod(const KPoly& a, const KPoly& b);
KPoly kp_gcd(const KPoly& a, const KPoly& b); // monic
KPoly kp_derivative(const KPoly& a);

// Root multiplicity pattern of a nonzero polynomial over the algebraic
// closure: squarefree decomposition (f = prod a_i^i) turned into one entry
// per root, e.g. x^2(x-1) -> {2,1}; sorted descending.
std::vector<int> kp_multiplicity_pattern(const KPoly& a);

} // namespace k3mw
