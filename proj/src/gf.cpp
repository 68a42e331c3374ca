#include "k3mw/gf.hpp"

#include <stdexcept>

namespace k3mw {

namespace {

using GP = std::vector<long long>;

void trim(GP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

GP mul_mod(const GP& a, const GP& b, const GP& m, long long p) {
    if (a.empty() || b.empty()) return {};
    GP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    // reduce mod monic m
    while (r.size() >= m.size()) {
        long long f = r.back();
        size_t sh = r.size() - m.size();
        if (f)
            for (size_t i = 0; i < m.size(); ++i)
                r[sh + i] = ((r[sh + i] - f * m[i]) % p + p) % p;
        r.pop_back();
        trim(r);
        if (r.empty()) break;
    }
    trim(r);
    return r;
}

GP gcd_gp(GP a, GP b, long long p) {
    auto inv = [&](long long x) {
        long long t = 0, nt = 1, r = p, nr = x % p;
        while (nr) {
            long long qq = r / nr;
            long long tmp = t - qq * nt;
            t = nt;
            nt = tmp;
            tmp = r - qq * nr;
            r = nr;
            nr = tmp;
        }
        return ((t % p) + p) % p;
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        long long li = inv(b.back());
        GP r = a;
        while (r.size() >= b.size()) {
            long long f = r.back() * li % p;
            size_t sh = r.size() - b.size();
            if (f)
                for (size_t i = 0; i < b.size(); ++i)
                    r[sh + i] = ((r[sh + i] - f * b[i]) % p + p) % p;
            r.pop_back();
            trim(r);
            if (r.empty()) break;
        }
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

GP xq_pow_mod(long long p, long long e_p_power, const GP& m) {
    // x^(p^k) mod m by k-fold repeated powering x -> x^p
    GP x = {0, 1};
    GP cur = x;
    // compute via square-and-multiply on exponent p, k times
    long long k = e_p_power;
    for (long long step = 0; step < k; ++step) {
        GP acc = {1};
        GP base = cur;
        long long e = p;
        while (e) {
            if (e & 1) acc = mul_mod(acc, base, m, p);
            base = mul_mod(base, base, m, p);
            e >>= 1;
        }
        cur = acc;
    }
    return cur;
}

} // namespace

std::vector<long long> find_irreducible_modulus(long long p, int n) {
    if (n == 1) return {0, 1}; // x
    std::vector<long long> c(n, 0);
    while (true) {
        GP m(c.begin(), c.end());
        m.push_back(1); // monic
        bool irred = true;
        if (m[0] == 0) irred = false; // divisible by x
        for (int k = 1; irred && k <= n / 2; ++k) {
            GP xq = xq_pow_mod(p, k, m);
            // xq - x
            GP d = xq;
            if (d.size() < 2) d.resize(2, 0);
            d[1] = ((d[1] - 1) % p + p) % p;
            trim(d);
            GP g = gcd_gp(m, d, p);
            if (g.size() != 1) irred = false;
        }
        if (irred) return std::vector<long long>(m.begin(), m.end());
        // next coefficient vector
        int i = 0;
        while (i < n && c[i] == p - 1) c[i++] = 0;
        if (i == n) throw std::logic_error("no irreducible modulus found");
        ++c[i];
    }
}

FieldTower::FieldTower(long long p, int n) : p_(p), n_(n) {
    if (p < 3 || p % 2 == 0) throw std::domain_error("tower characteristic must be an odd prime");
    // primality by trial division (desk-scale p)
    for (long long d = 3; d * d <= p; d += 2)
        if (p % d == 0) throw std::domain_error("tower characteristic must be prime");
    if (n < 1) throw std::domain_error("tower degree must be >= 1");
    q_ = 1;
    for (int i = 0; i < n; ++i) {
        q_ *= p;
        if (q_ > (1LL << 22))
            throw std::domain_error("field too large for table-based arithmetic");
    }
    modulus_ = find_irreducible_modulus(p, n);

    // exp/log tables over a generator
    log_.assign(q_, -1);
    exp_.assign(q_ - 1, 0);
    auto encode = [&](const GP& a) {
        long long v = 0;
        for (size_t i = a.size(); i-- > 0;) v = v * p_ + a[i];
        return v;
    };
    auto decode = [&](long long v) {
        GP a(n_);
        for (int i = 0; i < n_; ++i) {
            a[i] = v % p_;
            v /= p_;
        }
        trim(a);
        return a;
    };
    GP m(modulus_.begin(), modulus_.end());
    // factor q-1 for order tests
    std::vector<long long> prime_factors;
    long long t = q_ - 1;
    for (long long d = 2; d * d <= t; ++d)
        if (t % d == 0) {
            prime_factors.push_back(d);
            while (t % d == 0) t /= d;
        }
    if (t > 1) prime_factors.push_back(t);

    auto pow_gp = [&](GP base, long long e) {
        GP acc = {1};
        while (e) {
            if (e & 1) acc = mul_mod(acc, base, m, p_);
            base = mul_mod(base, base, m, p_);
            e >>= 1;
        }
        return acc;
    };
    long long gen_code = 0;
    for (long long cand = 2; cand < q_; ++cand) {
        GP g = decode(cand);
        bool primitive = true;
        for (long long f : prime_factors) {
            GP e = pow_gp(g, (q_ - 1) / f);
            if (e.size() == 1 && e[0] == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            gen_code = cand;
            break;
        }
    }
    if (!gen_code) throw std::logic_error("no generator found");

    GP cur = {1};
    GP g = decode(gen_code);
    for (long long i = 0; i < q_ - 1; ++i) {
        long long code = encode(cur);
        exp_[i] = code;
        log_[code] = (int32_t)i;
        cur = mul_mod(cur, g, m, p_);
    }
    if (encode(cur) != 1) throw std::logic_error("generator order mismatch");
}

long long FieldTower::add(long long a, long long b) const {
    long long r = 0, mul = 1;
    for (int i = 0; i < n_; ++i) {
        long long da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        r += ((da + db) % p_) * mul;
        mul *= p_;
    }
    return r;
}

long long FieldTower::sub(long long a, long long b) const {
    long long r = 0, mul = 1;
    for (int i = 0; i < n_; ++i) {
        long long da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        r += ((da - db) % p_ + p_) % p_ * mul;
        mul *= p_;
    }
    return r;
}

long long FieldTower::pow_elt(long long a, long long e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    long long r = 1;
    long long base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

long long FieldTower::reduce_rational(const Rational& r) const {
    BigInt d = den(r) % p_;
    if (d == 0) throw std::domain_error("prime divides a coefficient denominator");
    BigInt nn = num(r) % p_;
    long long dn = (long long)d, nl = (long long)nn;
    if (nl < 0) nl += p_;
    // inverse of dn mod p
    long long t = 0, nt = 1, rr = p_, nrr = dn;
    while (nrr) {
        long long qq = rr / nrr;
        long long tmp = t - qq * nt;
        t = nt;
        nt = tmp;
        tmp = rr - qq * nrr;
        rr = nrr;
        nrr = tmp;
    }
    long long inv = ((t % p_) + p_) % p_;
    return nl * inv % p_;
}

ReducedPoly reduce_poly(const Polynomial& f, long long p) {
    ReducedPoly out;
    out.nvars = (int)f.vars().size();
    for (const auto& [e, c] : f.terms()) {
        BigInt d = den(c) % p;
        if (d == 0) throw std::domain_error("prime divides a coefficient denominator");
        BigInt nn = num(c) % p;
        long long dn = (long long)d, nl = (long long)nn;
        if (nl < 0) nl += p;
        if (dn < 0) dn += p;
        long long t = 0, nt = 1, rr = p, nrr = dn;
        while (nrr) {
            long long qq = rr / nrr;
            long long tmp = t - qq * nt;
            t = nt;
            nt = tmp;
            tmp = rr - qq * nrr;
            rr = nrr;
            nrr = tmp;
        }
        long long inv = ((t % p) + p) % p;
        long long v = nl * inv % p;
        if (v) out.terms.push_back({v, e});
    }
    return out;
}

} // namespace k3mw
