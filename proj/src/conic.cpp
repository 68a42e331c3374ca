#include "k3mw/conic.hpp"

#include <algorithm>
#include <set>

namespace k3mw {

namespace {

// Legendre symbol (a/p) for odd prime p.
int legendre(BigInt a, const BigInt& p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    BigInt e = (p - 1) / 2, base = a, r = 1;
    while (e > 0) {
        if (e % 2 == 1) r = r * base % p;
        base = base * base % p;
        e /= 2;
    }
    return r == 1 ? 1 : -1;
}

// a = p^alpha * u with p not dividing u
int strip(BigInt& a, const BigInt& p) {
    int alpha = 0;
    while (a % p == 0) {
        a /= p;
        ++alpha;
    }
    return alpha;
}

int eps2(const BigInt& u) { return (int)((u - 1) / 2 % 2 ? 1 : 0); }  // (u-1)/2 mod 2
int omega2(const BigInt& u) { return (int)((u * u - 1) / 8 % 2 ? 1 : 0); }

std::vector<BigInt> odd_prime_divisors(BigInt n) {
    std::vector<BigInt> ps;
    n = boost::multiprecision::abs(n);
    strip(n, 2);
    for (BigInt p = 3; p * p <= n; p += 2)
        if (n % p == 0) {
            ps.push_back(p);
            strip(n, p);
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

} // namespace

int hilbert_symbol(BigInt a, BigInt b, const BigInt& p) {
    if (a == 0 || b == 0) throw std::invalid_argument("Hilbert symbol of zero");
    if (p == 0) // real place
        return (a < 0 && b < 0) ? -1 : 1;
    if (p == 2) {
        int alpha = strip(a, 2), beta = strip(b, 2);
        BigInt u = a, w = b; // odd parts (signed)
        // reduce sign into the odd part; formulas use the odd residues mod 8
        int e = (eps2(((u % 8) + 8) % 8) * eps2(((w % 8) + 8) % 8) +
                 alpha * omega2(((w % 8) + 8) % 8) + beta * omega2(((u % 8) + 8) % 8)) %
                2;
        return e ? -1 : 1;
    }
    // odd prime
    int alpha = strip(a, p), beta = strip(b, p);
    int e = (alpha * beta * (int)(((p - 1) / 2) % 2)) % 2;
    int s = e ? -1 : 1;
    if (beta % 2) s *= legendre(a, p);
    if (alpha % 2) s *= legendre(b, p);
    return s;
}

ConicResult conic_point(const Rational& ra, const Rational& rb, const Rational& rc) {
    if (ra == 0 || rb == 0 || rc == 0)
        throw std::domain_error("conic coefficients must be nonzero");

    // scale to coprime integers
    BigInt l = 1;
    for (const Rational* r : {&ra, &rb, &rc}) l = l / big_gcd(l, den(*r)) * den(*r);
    BigInt a = num(ra) * (l / den(ra));
    BigInt b = num(rb) * (l / den(rb));
    BigInt c = num(rc) * (l / den(rc));
    BigInt g = big_gcd(big_gcd(a < 0 ? -a : a, b < 0 ? -b : b), c < 0 ? -c : c);
    a /= g;
    b /= g;
    c /= g;

    ConicResult out;
    BigInt u = -a * b, v = -a * c;

    // places: real, 2, odd primes dividing abc
    std::vector<std::pair<std::string, BigInt>> places = {{"real", 0}, {"2", 2}};
    std::set<std::string> seen;
    for (const BigInt& p : odd_prime_divisors(a * b * c)) {
        std::string name = p.str();
        if (seen.insert(name).second) places.push_back({name, p});
    }
    bool ok = true;
    for (const auto& [name, p] : places) {
        int s = hilbert_symbol(u, v, p);
        out.symbols.push_back({name, s});
        if (s != 1 && ok) {
            ok = false;
            out.obstruction = name;
        }
    }
    out.soluble = ok;
    if (!ok) return out;

    // height search; signs never matter for a diagonal conic. The Holzer
    // bound guarantees a solution with coordinates below sqrt(|abc|)-scale.
    BigInt cap = isqrt_big(boost::multiprecision::abs(a * b)) +
                 isqrt_big(boost::multiprecision::abs(a * c)) +
                 isqrt_big(boost::multiprecision::abs(b * c)) + 2;
    for (BigInt h = 1;; ++h) {
        for (BigInt x = 0; x <= h; ++x)
            for (BigInt y = 0; y <= h; ++y) {
                // at least one coordinate on the shell boundary
                for (BigInt z = 0; z <= h; ++z) {
                    if (x != h && y != h && z != h) continue;
                    if (x == 0 && y == 0 && z == 0) continue;
                    if (a * x * x + b * y * y + c * z * z != 0) continue;
                    BigInt gg = big_gcd(big_gcd(x, y), z);
                    out.point = {x / gg, y / gg, z / gg};
                    return out;
                }
            }
        if (h > cap)
            throw std::logic_error("conic search exceeded the Holzer bound on a soluble form");
    }
}

} // namespace k3mw
