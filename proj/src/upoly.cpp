#include "k3mw/upoly.hpp"

#include <algorithm>
#include <sstream>

namespace k3mw {

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Rational> r(std::max(c.size(), o.c.size()), Rational(0));
    for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
    return UPoly(std::move(r));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + (o * Rational(-1)); }

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<Rational> r(c.size() + o.c.size() - 1, Rational(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
    }
    return UPoly(std::move(r));
}

UPoly UPoly::operator*(const Rational& k) const {
    if (k == 0) return UPoly();
    std::vector<Rational> r = c;
    for (auto& v : r) v *= k;
    return UPoly(std::move(r));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rational(1) / lc());
}

UPoly UPoly::derivative() const {
    if (c.size() <= 1) return UPoly();
    std::vector<Rational> r(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * Rational((Int)i);
    return UPoly(std::move(r));
}

Rational UPoly::eval(const Rational& v) const {
    Rational acc = 0;
    for (size_t i = c.size(); i-- > 0;) acc = acc * v + c[i];
    return acc;
}

UPoly UPoly::shift_up(int k) const {
    if (is_zero()) return UPoly();
    std::vector<Rational> r(c.size() + k, Rational(0));
    for (size_t i = 0; i < c.size(); ++i) r[i + k] = c[i];
    return UPoly(std::move(r));
}

UPoly UPoly::reversed(int target_deg) const {
    if (deg() > target_deg) throw std::invalid_argument("reversal degree too small");
    std::vector<Rational> r(target_deg + 1, Rational(0));
    for (size_t i = 0; i < c.size(); ++i) r[target_deg - i] = c[i];
    return UPoly(std::move(r));
}

std::string UPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
        Rational a = at(i);
        if (a == 0) continue;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0 || a != 1) {
            os << num(a);
            if (den(a) != 1) os << "/" << den(a);
            if (i > 0) os << "*";
        }
        if (i > 0) {
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    UPoly r = a;
    std::vector<Rational> q(std::max(0, a.deg() - b.deg() + 1), Rational(0));
    while (!r.is_zero() && r.deg() >= b.deg()) {
        Rational f = r.lc() / b.lc();
        int sh = r.deg() - b.deg();
        q[sh] = f;
        r = r - (b * f).shift_up(sh);
    }
    return {UPoly(std::move(q)), r};
}

UPoly divexact(const UPoly& a, const UPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

ZPrimitive to_primitive(const UPoly& f) {
    ZPrimitive out;
    if (f.is_zero()) {
        out.content = 0;
        return out;
    }
    BigInt l = 1;
    for (const auto& v : f.c) l = l / big_gcd(l, den(v)) * den(v);
    std::vector<BigInt> z(f.c.size());
    for (size_t i = 0; i < f.c.size(); ++i) z[i] = num(f.c[i]) * (l / den(f.c[i]));
    BigInt g = 0;
    for (const auto& v : z) g = big_gcd(g, v);
    if (z.back() < 0) g = -g;
    for (auto& v : z) v /= g;
    out.content = Rational(g, l);
    out.p = std::move(z);
    return out;
}

UPoly from_z(const std::vector<BigInt>& zp) {
    std::vector<Rational> c(zp.size());
    for (size_t i = 0; i < zp.size(); ++i) c[i] = Rational(zp[i]);
    return UPoly(std::move(c));
}

namespace {

void z_trim(std::vector<BigInt>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

std::vector<BigInt> z_primitive_part(std::vector<BigInt> v) {
    z_trim(v);
    if (v.empty()) return v;
    BigInt g = 0;
    for (const auto& x : v) g = big_gcd(g, x);
    if (v.back() < 0) g = -g;
    for (auto& x : v) x /= g;
    return v;
}

// Pseudo-remainder of a by b (deg a >= deg b, b nonzero).
std::vector<BigInt> z_prem(std::vector<BigInt> a, const std::vector<BigInt>& b) {
    int db = (int)b.size() - 1;
    BigInt lb = b.back();
    while (true) {
        z_trim(a);
        int da = (int)a.size() - 1;
        if (da < db) return a;
        BigInt la = a.back();
        for (auto& x : a) x *= lb;
        for (int i = 0; i <= db; ++i) a[da - db + i] -= la * b[i];
    }
}

} // namespace

namespace {

// gcd degree modulo a prime that preserves both leading coefficients; an
// upper bound for the degree of the rational gcd. -1 when p is unusable.
int modular_gcd_degree(const std::vector<BigInt>& a, const std::vector<BigInt>& b,
                       long long p) {
    if (a.back() % p == 0 || b.back() % p == 0) return -1;
    auto red = [&](const std::vector<BigInt>& v) {
        std::vector<long long> r(v.size());
        for (size_t i = 0; i < v.size(); ++i) {
            BigInt m = v[i] % p;
            if (m < 0) m += p;
            r[i] = (long long)m;
        }
        return r;
    };
    auto inv = [&](long long x) {
        long long t = 0, nt = 1, r = p, nr = x % p;
        while (nr) {
            long long q = r / nr;
            long long tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        return ((t % p) + p) % p;
    };
    std::vector<long long> u = red(a), v = red(b);
    auto trim = [](std::vector<long long>& w) {
        while (!w.empty() && w.back() == 0) w.pop_back();
    };
    trim(u);
    trim(v);
    while (!v.empty()) {
        long long li = inv(v.back());
        while (u.size() >= v.size()) {
            long long f = u.back() * li % p;
            size_t sh = u.size() - v.size();
            if (f)
                for (size_t i = 0; i < v.size(); ++i)
                    u[sh + i] = ((u[sh + i] - (__int128)f * v[i]) % p + p) % p;
            u.pop_back();
            trim(u);
            if (u.empty()) break;
        }
        std::swap(u, v);
    }
    return (int)u.size() - 1;
}

} // namespace

UPoly gcd(const UPoly& a, const UPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<BigInt> r0 = to_primitive(a).p, r1 = to_primitive(b).p;
    if (r0.size() < r1.size()) std::swap(r0, r1);
    // modular shortcut: the gcd degree mod p bounds the rational gcd degree,
    // so a coprime reduction certifies coprimality without the integer PRS
    for (long long p : {1000003LL, 999983LL}) {
        int d = modular_gcd_degree(r0, r1, p);
        if (d == 0) return UPoly::constant(1);
        if (d >= 0) break;
    }
    while (!r1.empty()) {
        auto r = z_prem(r0, r1);
        r0 = std::move(r1);
        r1 = z_primitive_part(std::move(r));
    }
    return from_z(r0).monic();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& f) {
    std::vector<std::pair<UPoly, int>> out;
    if (f.is_zero() || f.deg() == 0) return out;
    const UPoly fm = f.monic();
    UPoly g = gcd(fm, fm.derivative());
    UPoly w = divexact(fm, g).monic();
    UPoly y = divexact(fm.derivative(), g);
    UPoly z = y - w.derivative();
    int i = 1;
    while (!z.is_zero()) {
        UPoly a = gcd(w, z);
        if (a.deg() > 0) out.push_back({a, i});
        w = divexact(w, a).monic();
        y = divexact(z, a);
        z = y - w.derivative();
        ++i;
    }
    if (w.deg() > 0) out.push_back({w, i});
    return out;
}

int multiplicity_of(const UPoly& f, const UPoly& g) {
    if (g.deg() < 1) throw std::invalid_argument("multiplicity of a constant");
    int m = 0;
    UPoly r = f;
    while (!r.is_zero()) {
        auto [q, rem] = divmod(r, g);
        if (!rem.is_zero()) break;
        r = q;
        ++m;
    }
    return m;
}

} // namespace k3mw
