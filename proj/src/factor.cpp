#include "k3mw/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace k3mw {

namespace {

// ---- F_p univariate arithmetic (p < 2^31) -----------------------------------

using GP = std::vector<long long>; // coeff i of t^i, values in [0,p)

void gp_trim(GP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

GP gp_mul(const GP& a, const GP& b, long long p) {
    if (a.empty() || b.empty()) return {};
    GP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    gp_trim(r);
    return r;
}

long long inv_mod(long long a, long long p) {
    long long t = 0, nt = 1, r = p, nr = a % p;
    while (nr) {
        long long q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return ((t % p) + p) % p;
}

GP gp_rem(GP a, const GP& b, long long p) {
    long long li = inv_mod(b.back(), p);
    while (a.size() >= b.size()) {
        long long f = a.back() * li % p;
        size_t sh = a.size() - b.size();
        if (f)
            for (size_t i = 0; i < b.size(); ++i)
                a[sh + i] = ((a[sh + i] - f * b[i]) % p + p) % p;
        a.pop_back();
        gp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

GP gp_divexact(GP a, const GP& b, long long p) {
    long long li = inv_mod(b.back(), p);
    GP q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    while (a.size() >= b.size()) {
        long long f = a.back() * li % p;
        size_t sh = a.size() - b.size();
        q[sh] = f;
        if (f)
            for (size_t i = 0; i < b.size(); ++i)
                a[sh + i] = ((a[sh + i] - f * b[i]) % p + p) % p;
        a.pop_back();
        gp_trim(a);
        if (a.empty()) break;
    }
    gp_trim(q);
    return q;
}

GP gp_gcd(GP a, GP b, long long p) {
    gp_trim(a);
    gp_trim(b);
    while (!b.empty()) {
        GP r = gp_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        long long li = inv_mod(a.back(), p);
        for (auto& v : a) v = v * li % p;
    }
    return a;
}

GP gp_monic(GP a, long long p) {
    gp_trim(a);
    if (a.empty()) return a;
    long long li = inv_mod(a.back(), p);
    for (auto& v : a) v = v * li % p;
    return a;
}

GP gp_powmod_x(long long e, const GP& m, long long p) {
    // x^e mod m by square-and-multiply
    GP r = {1};
    GP base = gp_rem({0, 1}, m, p);
    while (e) {
        if (e & 1) r = gp_rem(gp_mul(r, base, p), m, p);
        base = gp_rem(gp_mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

bool gp_squarefree(const GP& a, long long p) {
    GP d(a.size() > 1 ? a.size() - 1 : 0, 0);
    for (size_t i = 1; i < a.size(); ++i) d[i - 1] = (long long)(i % p) * a[i] % p;
    gp_trim(d);
    if (d.empty()) return false;
    return gp_gcd(a, d, p).size() == 1;
}

// Berlekamp factorization of a monic squarefree polynomial mod p.
std::vector<GP> berlekamp(const GP& a, long long p) {
    int n = (int)a.size() - 1;
    if (n <= 1) return {a};
    // Q matrix: row i = x^{i p} mod a
    std::vector<GP> rows(n);
    GP xp = gp_powmod_x(p, a, p);
    GP cur = {1};
    for (int i = 0; i < n; ++i) {
        rows[i] = cur;
        rows[i].resize(n, 0);
        cur = gp_rem(gp_mul(cur, xp, p), a, p);
    }
    // B = Q^T - I acting on coefficient columns; we solve v B = 0 via rows.
    // Work with matrix M[i][j] = rows[i][j] - delta_ij and find the left
    // nullspace of M (vectors v with sum_i v_i row_i = v).
    std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[i][j] = ((rows[i][j] - (i == j ? 1 : 0)) % p + p) % p;
    // Gaussian elimination on columns of m (treat rows as vectors; we need
    // the nullspace of the transpose): transpose first.
    std::vector<std::vector<long long>> t(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) t[j][i] = m[i][j];
    // Row reduce t; nullspace basis of t gives Berlekamp subalgebra elements.
    std::vector<int> pivot_col(n, -1);
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int r = rank; r < n; ++r)
            if (t[r][col]) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(t[piv], t[rank]);
        long long li = inv_mod(t[rank][col], p);
        for (int j = 0; j < n; ++j) t[rank][j] = t[rank][j] * li % p;
        for (int r = 0; r < n; ++r) {
            if (r == rank || !t[r][col]) continue;
            long long f = t[r][col];
            for (int j = 0; j < n; ++j)
                t[r][j] = ((t[r][j] - f * t[rank][j]) % p + p) % p;
        }
        pivot_col[rank] = col;
        ++rank;
    }
    int nullity = n - rank;
    if (nullity == 1) return {a};
    std::vector<GP> basis;
    std::vector<bool> is_pivot(n, false);
    for (int r = 0; r < rank; ++r) is_pivot[pivot_col[r]] = true;
    for (int col = 0; col < n; ++col) {
        if (is_pivot[col]) continue;
        GP v(n, 0);
        v[col] = 1;
        for (int r = 0; r < rank; ++r)
            v[pivot_col[r]] = ((-t[r][col]) % p + p) % p;
        gp_trim(v);
        basis.push_back(v);
    }

    std::vector<GP> factors = {a};
    for (const auto& v : basis) {
        if ((int)factors.size() >= nullity) break;
        if (v.size() <= 1) continue; // constant subalgebra element
        std::vector<GP> next;
        for (const auto& u : factors) {
            if ((int)u.size() - 1 <= 1) { next.push_back(u); continue; }
            std::vector<GP> pieces;
            GP rest = u;
            for (long long s = 0; s < p && rest.size() > 1; ++s) {
                GP vs = v;
                vs.resize(std::max<size_t>(vs.size(), 1), 0);
                vs[0] = ((vs[0] - s) % p + p) % p;
                gp_trim(vs);
                GP g = gp_gcd(rest, vs, p);
                if (g.size() > 1 && g.size() < rest.size()) {
                    pieces.push_back(g);
                    rest = gp_monic(gp_divexact(rest, g, p), p);
                } else if (g.size() == rest.size() && rest.size() > 1) {
                    // whole remainder splits off at this s
                    pieces.push_back(rest);
                    rest = {1};
                }
            }
            if (rest.size() > 1) pieces.push_back(rest);
            for (auto& pc : pieces) next.push_back(gp_monic(pc, p));
        }
        factors = std::move(next);
    }
    return factors;
}

// ---- Z polynomial helpers ----------------------------------------------------

using ZP = std::vector<BigInt>;

void zp_trim(ZP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZP zp_mul(const ZP& a, const ZP& b) {
    if (a.empty() || b.empty()) return {};
    ZP r(a.size() + b.size() - 1, BigInt(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// Exact division over Z; returns empty optional-style flag via bool.
bool zp_divides(const ZP& b, const ZP& a, ZP* quot) {
    // does b divide a?
    ZP r = a;
    zp_trim(r);
    if (b.empty()) return false;
    ZP q(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, BigInt(0));
    while (!r.empty() && r.size() >= b.size()) {
        if (r.back() % b.back() != 0) return false;
        BigInt f = r.back() / b.back();
        size_t sh = r.size() - b.size();
        q[sh] = f;
        for (size_t i = 0; i < b.size(); ++i) r[sh + i] -= f * b[i];
        zp_trim(r);
    }
    if (!r.empty()) return false;
    if (quot) *quot = q;
    return true;
}

BigInt zp_norm2_sq(const ZP& a) {
    BigInt s = 0;
    for (const auto& v : a) s += v * v;
    return s;
}

ZP zp_mod(const ZP& a, const BigInt& m) {
    ZP r = a;
    for (auto& v : r) {
        v %= m;
        if (v < 0) v += m;
    }
    zp_trim(r);
    return r;
}

ZP zp_balanced(const ZP& a, const BigInt& m) {
    ZP r = zp_mod(a, m);
    for (auto& v : r)
        if (2 * v > m) v -= m;
    zp_trim(r);
    return r;
}

ZP zp_mulmod(const ZP& a, const ZP& b, const BigInt& m) { return zp_mod(zp_mul(a, b), m); }

ZP zp_addmod(const ZP& a, const ZP& b, const BigInt& m) {
    ZP r(std::max(a.size(), b.size()), BigInt(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    return zp_mod(r, m);
}

ZP zp_submod(const ZP& a, const ZP& b, const BigInt& m) {
    ZP r(std::max(a.size(), b.size()), BigInt(0));
    for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    return zp_mod(r, m);
}

// divmod by a monic polynomial mod m
std::pair<ZP, ZP> zp_divmod_monic(const ZP& a, const ZP& b, const BigInt& m) {
    ZP r = zp_mod(a, m);
    if (b.empty() || b.back() != 1) throw std::logic_error("zp_divmod_monic: divisor not monic");
    ZP q(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, BigInt(0));
    while (!r.empty() && r.size() >= b.size()) {
        BigInt f = r.back();
        size_t sh = r.size() - b.size();
        q[sh] = f;
        for (size_t i = 0; i < b.size(); ++i) {
            r[sh + i] -= f * b[i];
            r[sh + i] %= m;
            if (r[sh + i] < 0) r[sh + i] += m;
        }
        zp_trim(r);
    }
    return {zp_mod(q, m), r};
}

// ---- Hensel lifting -----------------------------------------------------------

// One quadratic step: f = g h (mod m), s g + t h = 1 (mod m), g,h monic ->
// same data mod m^2.
void hensel_step(const ZP& f, ZP& g, ZP& h, ZP& s, ZP& t, const BigInt& m) {
    BigInt m2 = m * m;
    ZP e = zp_submod(zp_mod(f, m2), zp_mulmod(g, h, m2), m2);
    auto [q, r] = zp_divmod_monic(zp_mulmod(s, e, m2), h, m2);
    ZP g1 = zp_addmod(zp_addmod(g, zp_mulmod(t, e, m2), m2), zp_mulmod(q, g, m2), m2);
    ZP h1 = zp_addmod(h, r, m2);
    ZP b = zp_submod(zp_addmod(zp_mulmod(s, g1, m2), zp_mulmod(t, h1, m2), m2), {1}, m2);
    auto [c, d] = zp_divmod_monic(zp_mulmod(s, b, m2), h1, m2);
    ZP s1 = zp_submod(s, d, m2);
    ZP t1 = zp_submod(zp_submod(t, zp_mulmod(t, b, m2), m2), zp_mulmod(c, g1, m2), m2);
    g = g1;
    h = h1;
    s = s1;
    t = t1;
}

// Extended gcd over F_p for the Bezout start.
void gp_extgcd(const GP& a, const GP& b, long long p, GP& s, GP& t) {
    GP r0 = a, r1 = b, s0 = {1}, s1 = {}, t0 = {}, t1 = {1};
    gp_trim(r0);
    gp_trim(r1);
    while (!r1.empty()) {
        // q = r0 / r1
        GP q = gp_divexact(r0, r1, p);
        GP r2 = gp_rem(r0, r1, p);
        r0 = r1;
        r1 = r2;
        GP s2 = s0, t2 = t0;
        GP qs = gp_mul(q, s1, p), qt = gp_mul(q, t1, p);
        s2.resize(std::max(s2.size(), qs.size()), 0);
        for (size_t i = 0; i < qs.size(); ++i) s2[i] = ((s2[i] - qs[i]) % p + p) % p;
        t2.resize(std::max(t2.size(), qt.size()), 0);
        for (size_t i = 0; i < qt.size(); ++i) t2[i] = ((t2[i] - qt[i]) % p + p) % p;
        gp_trim(s2);
        gp_trim(t2);
        s0 = s1;
        s1 = s2;
        t0 = t1;
        t1 = t2;
    }
    // r0 = gcd (should be a nonzero constant for coprime inputs)
    if (r0.size() != 1) throw std::logic_error("extgcd: inputs not coprime");
    long long li = inv_mod(r0[0], p);
    for (auto& v : s0) v = v * li % p;
    for (auto& v : t0) v = v * li % p;
    s = s0;
    t = t0;
}

ZP from_gp(const GP& a) {
    ZP r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    return r;
}

// Lift the factorization f = prod(parts) from mod p to mod >= target.
// f monic over Z; parts monic mod p, pairwise coprime. Returns factors mod pk
// and sets pk.
std::vector<ZP> hensel_lift_tree(const ZP& f, const std::vector<GP>& parts, long long p,
                                 const BigInt& target, BigInt& pk) {
    if (parts.size() == 1) {
        pk = p;
        while (pk < target) pk *= pk;
        return {zp_mod(f, pk)};
    }
    size_t half = parts.size() / 2;
    std::vector<GP> left(parts.begin(), parts.begin() + half);
    std::vector<GP> right(parts.begin() + half, parts.end());
    GP gl = {1}, gr = {1};
    for (const auto& u : left) gl = gp_mul(gl, u, p);
    for (const auto& u : right) gr = gp_mul(gr, u, p);
    GP s, t;
    gp_extgcd(gl, gr, p, s, t);

    ZP G = from_gp(gl), H = from_gp(gr), S = from_gp(s), T = from_gp(t);
    BigInt m = p;
    while (m < target) {
        hensel_step(f, G, H, S, T, m);
        m *= m;
    }
    pk = m;
    BigInt sub;
    auto lf = hensel_lift_tree(G, left, p, target, sub);
    auto rf = hensel_lift_tree(H, right, p, target, sub);
    std::vector<ZP> out;
    for (auto& x : lf) out.push_back(zp_mod(x, m));
    for (auto& x : rf) out.push_back(zp_mod(x, m));
    return out;
}

// ---- Zassenhaus over Z (monic) ------------------------------------------------

// Factor a monic squarefree integer polynomial.
std::vector<ZP> factor_monic_squarefree(const ZP& f) {
    int n = (int)f.size() - 1;
    if (n <= 1) return {f};

    static const long long primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31,
                                       37, 41, 43, 47, 53, 59, 61, 67, 71, 73,
                                       79, 83, 89, 97, 101, 103, 107, 109, 113, 127};
    long long best_p = 0;
    std::vector<GP> best_factors;
    std::set<int> possible_degrees; // subset sums achievable by every prime
    bool first_pattern = true;
    int tried = 0;
    for (long long p : primes) {
        if (f.back() % p == 0) continue;
        GP fp(f.size());
        for (size_t i = 0; i < f.size(); ++i) {
            BigInt v = f[i] % p;
            if (v < 0) v += p;
            fp[i] = (long long)v;
        }
        gp_trim(fp);
        if ((int)fp.size() - 1 != n) continue;
        if (!gp_squarefree(fp, p)) continue;
        auto fac = berlekamp(gp_monic(fp, p), p);
        if (fac.size() == 1) return {f}; // irreducible mod p => irreducible
        if (best_p == 0 || fac.size() < best_factors.size()) {
            best_p = p;
            best_factors = fac;
        }
        // degree pattern subset sums
        std::set<int> sums = {0};
        for (const auto& u : fac) {
            int d = (int)u.size() - 1;
            std::set<int> next = sums;
            for (int s : sums) next.insert(s + d);
            sums = next;
        }
        if (first_pattern) {
            possible_degrees = sums;
            first_pattern = false;
        } else {
            std::set<int> inter;
            std::set_intersection(possible_degrees.begin(), possible_degrees.end(),
                                  sums.begin(), sums.end(),
                                  std::inserter(inter, inter.begin()));
            possible_degrees = inter;
        }
        if (possible_degrees.size() == 2) return {f}; // only {0, n} possible
        if (++tried >= 5) break;
    }
    if (best_p == 0)
        throw std::runtime_error("factorization: no usable prime found");

    // Landau-Mignotte: factor coefficients bounded by 2^n * ||f||_2.
    BigInt bound = (isqrt_big(zp_norm2_sq(f)) + 1) * pow_big(2, (unsigned)n);
    BigInt target = 2 * bound + 1;
    BigInt pk;
    auto lifted = hensel_lift_tree(zp_mod(f, [&] {
                                       BigInt m = best_p;
                                       while (m < target) m *= m;
                                       return m;
                                   }()),
                                   best_factors, best_p, target, pk);

    // Subset recombination.
    std::vector<ZP> result;
    ZP rest = f;
    std::vector<ZP> pool = lifted;
    int max_take = (int)pool.size();
    for (int take = 1; take <= max_take && (int)pool.size() >= 2 * take; ++take) {
        bool found = true;
        while (found && (int)pool.size() >= 2 * take) {
            found = false;
            std::vector<int> idx(take);
            std::iota(idx.begin(), idx.end(), 0);
            while (true) {
                ZP cand = {1};
                for (int i : idx) cand = zp_mulmod(cand, pool[i], pk);
                cand = zp_balanced(cand, pk);
                ZP quot;
                if (zp_divides(cand, rest, &quot)) {
                    result.push_back(cand);
                    rest = quot;
                    std::vector<ZP> np;
                    for (int i = 0; i < (int)pool.size(); ++i)
                        if (std::find(idx.begin(), idx.end(), i) == idx.end())
                            np.push_back(pool[i]);
                    pool = np;
                    found = true;
                    break;
                }
                // next combination
                int i = take - 1;
                while (i >= 0 && idx[i] == (int)pool.size() - take + i) --i;
                if (i < 0) break;
                ++idx[i];
                for (int j = i + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
            }
        }
    }
    if (!pool.empty()) {
        zp_trim(rest);
        if (rest.size() > 1) result.push_back(rest);
    }
    return result;
}

// Factor a primitive squarefree integer polynomial with arbitrary lc.
std::vector<ZP> factor_primitive_squarefree(const ZP& f) {
    int n = (int)f.size() - 1;
    if (n <= 0) return {};
    if (n == 1) return {f};
    BigInt b = f.back();
    if (b == 1) return factor_monic_squarefree(f);
    if (b == -1) {
        ZP g = f;
        for (auto& v : g) v = -v;
        auto fac = factor_monic_squarefree(g);
        // restore the sign on one factor via content handling by the caller
        return fac;
    }
    // monicize: F(y) = b^{n-1} f(y/b), so F[i] = f[i] * b^{n-1-i}, F[n] = 1
    ZP F(f.size());
    F[n] = 1;
    BigInt pw = 1;
    for (int i = n - 1; i >= 0; --i) {
        F[i] = f[i] * pw;
        pw *= b;
    }
    auto mf = factor_monic_squarefree(F);
    std::vector<ZP> out;
    for (const auto& H : mf) {
        // h(x) = primitive part of H(bx)
        ZP h(H.size());
        BigInt q = 1;
        for (size_t i = 0; i < H.size(); ++i) {
            h[i] = H[i] * q;
            q *= b;
        }
        BigInt g = 0;
        for (const auto& v : h) g = big_gcd(g, v);
        if (h.back() < 0) g = -g;
        for (auto& v : h) v /= g;
        out.push_back(h);
    }
    return out;
}

} // namespace

UFactorization factor_rational(const UPoly& f) {
    UFactorization out;
    if (f.is_zero()) {
        out.content = 0;
        return out;
    }
    if (f.deg() == 0) {
        out.content = f.at(0);
        return out;
    }
    auto sf = squarefree_decomposition(f);
    std::vector<std::pair<UPoly, int>> factors;
    for (const auto& [part, mult] : sf) {
        auto zp = to_primitive(part);
        for (const auto& zf : factor_primitive_squarefree(zp.p))
            factors.push_back({from_z(zf), mult});
    }
    std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) {
        if (a.first.deg() != b.first.deg()) return a.first.deg() < b.first.deg();
        if (a.second != b.second) return a.second < b.second;
        return a.first.c < b.first.c;
    });
    // content = f / prod(factors^mult)
    UPoly prod = UPoly::constant(1);
    for (const auto& [g, m] : factors)
        for (int i = 0; i < m; ++i) prod = prod * g;
    UPoly q = divexact(f, prod);
    if (q.deg() != 0) throw std::logic_error("factorization does not multiply back");
    out.content = q.at(0);
    out.factors = std::move(factors);
    return out;
}

bool is_irreducible(const UPoly& f) {
    if (f.deg() < 1) return false;
    auto fac = factor_rational(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

} // namespace k3mw
