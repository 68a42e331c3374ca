#include "k3mw/numberfield.hpp"

#include "k3mw/factor.hpp"

#include <algorithm>

namespace k3mw {

NumberField::NumberField(UPoly modulus, bool certify) : m_(modulus.monic()) {
    if (m_.deg() < 1) throw std::invalid_argument("number field modulus must be nonconstant");
    if (certify && !is_irreducible(m_))
        throw std::invalid_argument("number field modulus is reducible");
}

NumberFieldPtr make_field(UPoly modulus, bool certify) {
    return std::make_shared<NumberField>(std::move(modulus), certify);
}

NFElt nf_make(const NumberFieldPtr& K, const UPoly& raw) {
    auto [q, r] = divmod(raw, K->modulus());
    (void)q;
    return {K, r};
}

NFElt nf_from_rational(const NumberFieldPtr& K, const Rational& r) {
    return {K, r == 0 ? UPoly() : UPoly::constant(r)};
}

NFElt nf_generator(const NumberFieldPtr& K) { return nf_make(K, UPoly::x()); }

static void check_same(const NFElt& a, const NFElt& b) {
    if (a.K != b.K && !(a.K->modulus() == b.K->modulus()))
        throw std::invalid_argument("number field mismatch");
}

NFElt operator+(const NFElt& a, const NFElt& b) {
    check_same(a, b);
    return {a.K, a.v + b.v};
}

NFElt operator-(const NFElt& a, const NFElt& b) {
    check_same(a, b);
    return {a.K, a.v - b.v};
}

NFElt operator*(const NFElt& a, const NFElt& b) {
    check_same(a, b);
    return nf_make(a.K, a.v * b.v);
}

NFElt nf_neg(const NFElt& a) { return {a.K, -a.v}; }

NFElt nf_scale(const NFElt& a, const Rational& r) { return {a.K, a.v * r}; }

NFElt nf_inv(const NFElt& a) {
    if (a.is_zero()) throw std::domain_error("inverse of zero in number field");
    // extended Euclid: s*a.v + t*m = gcd = const
    UPoly r0 = a.K->modulus(), r1 = a.v;
    UPoly s0, s1 = UPoly::constant(1);
    while (!r1.is_zero() && r1.deg() > 0) {
        auto [q, r2] = divmod(r0, r1);
        UPoly s2 = s0 - q * s1;
        r0 = r1;
        r1 = r2;
        s0 = s1;
        s1 = s2;
    }
    if (r1.is_zero()) throw std::domain_error("element is a zero divisor (reducible modulus?)");
    Rational g = r1.at(0);
    return nf_make(a.K, s1 * (Rational(1) / g));
}

NFElt nf_eval_upoly(const UPoly& f, const NFElt& a) {
    NFElt acc = nf_from_rational(a.K, 0);
    for (int i = f.deg(); i >= 0; --i) {
        acc = acc * a;
        acc = acc + nf_from_rational(a.K, f.at(i));
    }
    return acc;
}

std::string nf_str(const NFElt& a, const std::string& var) {
    return a.v.is_zero() ? "0" : a.v.str(var);
}

// ---- KPoly -------------------------------------------------------------------

void KPoly::trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
}

KPoly kp_make(const NumberFieldPtr& K, std::vector<NFElt> coeffs) {
    KPoly p;
    p.K = K;
    p.c = std::move(coeffs);
    p.trim();
    return p;
}

KPoly kp_from_upoly_coeffs(const NumberFieldPtr& K, const std::vector<UPoly>& coeffs) {
    std::vector<NFElt> cs;
    cs.reserve(coeffs.size());
    for (const auto& u : coeffs) cs.push_back(nf_make(K, u));
    return kp_make(K, std::move(cs));
}

KPoly kp_monic(const KPoly& a) {
    if (a.is_zero()) return a;
    NFElt li = nf_inv(a.lc());
    std::vector<NFElt> cs = a.c;
    for (auto& x : cs) x = x * li;
    return kp_make(a.K, std::move(cs));
}

KPoly kp_mul(const KPoly& a, const KPoly& b) {
    if (a.is_zero() || b.is_zero()) return kp_make(a.K, {});
    std::vector<NFElt> r(a.c.size() + b.c.size() - 1, nf_from_rational(a.K, 0));
    for (size_t i = 0; i < a.c.size(); ++i)
        for (size_t j = 0; j < b.c.size(); ++j) r[i + j] = r[i + j] + a.c[i] * b.c[j];
    return kp_make(a.K, std::move(r));
}

KPoly kp_sub(const KPoly& a, const KPoly& b) {
    std::vector<NFElt> r(std::max(a.c.size(), b.c.size()), nf_from_rational(a.K, 0));
    for (size_t i = 0; i < a.c.size(); ++i) r[i] = r[i] + a.c[i];
    for (size_t i = 0; i < b.c.size(); ++i) r[i] = r[i] - b.c[i];
    return kp_make(a.K, std::move(r));
}

std::pair<KPoly, KPoly> kp_divmod(const KPoly& a, const KPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial over K");
    KPoly r = a;
    std::vector<NFElt> q(std::max(0, a.deg() - b.deg() + 1), nf_from_rational(a.K, 0));
    NFElt li = nf_inv(b.lc());
    while (!r.is_zero() && r.deg() >= b.deg()) {
        NFElt f = r.lc() * li;
        int sh = r.deg() - b.deg();
        q[sh] = f;
        std::vector<NFElt> sub(sh, nf_from_rational(a.K, 0));
        for (const auto& x : b.c) sub.push_back(x * f);
        r = kp_sub(r, kp_make(a.K, std::move(sub)));
    }
    return {kp_make(a.K, std::move(q)), r};
}

KPoly kp_gcd(const KPoly& a, const KPoly& b) {
    KPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        auto [q, r2] = kp_divmod(r0, r1);
        (void)q;
        r0 = r1;
        r1 = r2;
    }
    return r0.is_zero() ? r0 : kp_monic(r0);
}

KPoly kp_derivative(const KPoly& a) {
    if (a.c.size() <= 1) return kp_make(a.K, {});
    std::vector<NFElt> r;
    for (size_t i = 1; i < a.c.size(); ++i)
        r.push_back(nf_scale(a.c[i], Rational((Int)i)));
    return kp_make(a.K, std::move(r));
}

std::vector<int> kp_multiplicity_pattern(const KPoly& a) {
    if (a.is_zero()) throw std::domain_error("multiplicity pattern of zero polynomial");
    std::vector<int> pattern;
    // Yun over a field of characteristic 0
    KPoly f = kp_monic(a);
    if (f.deg() == 0) return pattern;
    KPoly g = kp_gcd(f, kp_derivative(f));
    KPoly w = kp_divmod(f, g).first;
    KPoly y = kp_divmod(kp_derivative(f), g).first;
    KPoly z = kp_sub(y, kp_derivative(w));
    int i = 1;
    while (!z.is_zero()) {
        KPoly ai = kp_gcd(w, z);
        for (int k = 0; k < ai.deg(); ++k) pattern.push_back(i);
        w = kp_divmod(w, ai).first;
        y = kp_divmod(z, ai).first;
        z = kp_sub(y, kp_derivative(w));
        ++i;
    }
    for (int k = 0; k < w.deg(); ++k) pattern.push_back(i);
    std::sort(pattern.rbegin(), pattern.rend());
    return pattern;
}

} // namespace k3mw
