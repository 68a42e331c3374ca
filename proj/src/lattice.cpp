#include "k3mw/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace k3mw {

void validate(const GramLattice& L) {
    if (L.rank < 1 || L.rank > kMaxRank)
        throw std::invalid_argument("lattice rank must be in 1..4");
    for (int i = 0; i < L.rank; ++i) {
        if (L.g[i][i] % 2 != 0)
            throw std::invalid_argument("lattice is not even: odd diagonal entry");
        for (int j = 0; j < L.rank; ++j)
            if (L.g[i][j] != L.g[j][i])
                throw std::invalid_argument("Gram matrix is not symmetric");
    }
    for (int i = 0; i < L.rank; ++i)
        for (int j = i + 1; j < L.rank; ++j)
            if (L.labels[i] != BasisLabel::Generic && L.labels[i] == L.labels[j])
                throw std::invalid_argument("duplicate basis label");
}

GramLattice make_from_rows(const std::vector<std::vector<Int>>& rows,
                           const std::vector<BasisLabel>& labels) {
    GramLattice L;
    L.rank = (int)rows.size();
    if (L.rank < 1 || L.rank > kMaxRank)
        throw std::invalid_argument("lattice rank must be in 1..4");
    for (int i = 0; i < L.rank; ++i) {
        if ((int)rows[i].size() != L.rank)
            throw std::invalid_argument("Gram matrix is not square");
        for (int j = 0; j < L.rank; ++j) L.g[i][j] = rows[i][j];
    }
    L.labels.fill(BasisLabel::Generic);
    for (size_t i = 0; i < labels.size() && i < (size_t)L.rank; ++i)
        L.labels[i] = labels[i];
    validate(L);
    return L;
}

DivisorClass DivisorClass::of(const GramLattice& L, std::vector<Int> coeffs) {
    if ((int)coeffs.size() != L.rank)
        throw std::invalid_argument("coefficient length does not match lattice rank");
    DivisorClass v;
    v.lat = L;
    for (int i = 0; i < L.rank; ++i) v.c[i] = coeffs[i];
    return v;
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    if (!(lat == o.lat)) throw std::invalid_argument("lattice mismatch");
    DivisorClass r = *this;
    for (int i = 0; i < lat.rank; ++i) r.c[i] += o.c[i];
    return r;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    return *this + (o * -1);
}

DivisorClass DivisorClass::operator*(Int k) const {
    DivisorClass r = *this;
    for (int i = 0; i < lat.rank; ++i) r.c[i] *= k;
    return r;
}

Int pair_value(const DivisorClass& v, const DivisorClass& w) {
    if (!(v.lat == w.lat)) throw std::invalid_argument("lattice mismatch in pairing");
    Int s = 0;
    for (int i = 0; i < v.lat.rank; ++i)
        for (int j = 0; j < v.lat.rank; ++j)
            s += v.c[i] * v.lat.g[i][j] * w.c[j];
    return s;
}

Int genus(const DivisorClass& v) {
    Int s = self_pairing(v);
    if (s % 2 != 0 || s < -2)
        throw std::domain_error("genus needs even self-intersection >= -2");
    return (s + 2) / 2;
}

Signature signature(const GramLattice& L) {
    const int n = L.rank;
    std::array<std::array<Rational, kMaxRank>, kMaxRank> a{};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = Rational(L.g[i][j]);

    Signature sig;
    // Congruence diagonalization over Q on rows/cols [k..n).
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int i = k; i < n; ++i)
            if (a[i][i] != 0) { piv = i; break; }
        if (piv < 0) {
            // all diagonal zero; look for a nonzero off-diagonal entry
            int pi = -1, pj = -1;
            for (int i = k; i < n && pi < 0; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (a[i][j] != 0) { pi = i; pj = j; break; }
            if (pi < 0) {
                sig.n_zero += n - k;
                return sig;
            }
            // e_pi += e_pj makes the (pi,pi) entry 2*a[pi][pj] != 0
            for (int j = k; j < n; ++j) a[pi][j] += a[pj][j];
            for (int i = k; i < n; ++i) a[i][pi] += a[i][pj];
            piv = pi;
        }
        if (piv != k) {
            for (int j = k; j < n; ++j) std::swap(a[piv][j], a[k][j]);
            for (int i = k; i < n; ++i) std::swap(a[i][piv], a[i][k]);
        }
        Rational d = a[k][k];
        if (d > 0) sig.n_plus++;
        else sig.n_minus++;
        for (int i = k + 1; i < n; ++i) {
            Rational f = a[i][k] / d;
            if (f == 0) continue;
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            for (int j = k; j < n; ++j) a[j][i] -= f * a[j][k];
        }
    }
    return sig;
}

std::pair<Int, Int> canonical_gamma(Int b, Int c) {
    if (b < 1) throw std::domain_error("Gamma_{b,c} needs b >= 1");
    return {b, mod_floor(c, b)};
}

Int gamma_c_shifted_range(Int b, Int c) {
    Int cs = canonical_gamma(b, c).second;
    return cs <= b - 2 ? cs : cs - b;
}

namespace lattices {

GramLattice U() { return U_scaled(1); }

GramLattice U_scaled(Int m) {
    if (m < 1) throw std::invalid_argument("U(m) needs m >= 1");
    return make_from_rows({{0, m}, {m, 0}});
}

GramLattice rank1(Int twoe) {
    return make_from_rows({{twoe}});
}

GramLattice lambda(Int d) {
    if (d < 1) throw std::invalid_argument("Lambda_d needs d >= 1");
    return make_from_rows({{0, 1, 0}, {1, 0, 0}, {0, 0, -2 * d}},
                          {BasisLabel::Generic, BasisLabel::Generic, BasisLabel::B3});
}

GramLattice gamma(Int b, Int c) {
    if (b < 1) throw std::invalid_argument("Gamma_{b,c} needs b >= 1");
    return make_from_rows({{0, b}, {b, 2 * c}});
}

GramLattice phi(Int x) {
    if (x < 0) throw std::invalid_argument("Phi_x needs x >= 0");
    return make_from_rows({{0, 1, 2}, {1, -2, x}, {2, x, -2}},
                          {BasisLabel::F, BasisLabel::O, BasisLabel::Generic});
}

GramLattice phi_genus1(Int x) {
    if (x < 0) throw std::invalid_argument("genus-1 bisection span needs x >= 0");
    return make_from_rows({{0, 1, 2}, {1, -2, x}, {2, x, 0}},
                          {BasisLabel::F, BasisLabel::O, BasisLabel::Generic});
}

GramLattice multisection_span(Int m, Int x, int genus) {
    if (m < 2 || x < 0) throw std::invalid_argument("multisection span needs m >= 2, x >= 0");
    Int msq = genus == 0 ? -2 : 0;
    return make_from_rows({{0, 1, m}, {1, -2, x}, {m, x, msq}},
                          {BasisLabel::F, BasisLabel::O, BasisLabel::Generic});
}

GramLattice direct_sum(const GramLattice& A, const GramLattice& B) {
    if (A.rank + B.rank > kMaxRank)
        throw std::domain_error("unsupported rank: direct sum exceeds rank 4");
    GramLattice L;
    L.rank = A.rank + B.rank;
    L.labels.fill(BasisLabel::Generic);
    for (int i = 0; i < A.rank; ++i) {
        L.labels[i] = A.labels[i];
        for (int j = 0; j < A.rank; ++j) L.g[i][j] = A.g[i][j];
    }
    for (int i = 0; i < B.rank; ++i) {
        L.labels[A.rank + i] = B.labels[i];
        for (int j = 0; j < B.rank; ++j) L.g[A.rank + i][A.rank + j] = B.g[i][j];
    }
    validate(L);
    return L;
}

} // namespace lattices

namespace {

struct DescParser {
    const std::string& s;
    size_t i = 0;
    explicit DescParser(const std::string& t) : s(t) {}

    void skip() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("lattice descriptor: " + msg + " at position " +
                                    std::to_string(i));
    }
    Int integer() {
        skip();
        size_t start = i;
        // accept ASCII '-' and the minus sign U+2212 (0xE2 0x88 0x92)
        if (i + 2 < s.size() && (unsigned char)s[i] == 0xE2 &&
            (unsigned char)s[i + 1] == 0x88 && (unsigned char)s[i + 2] == 0x92)
            i += 3;
        else if (i < s.size() && (s[i] == '-' || s[i] == '+'))
            ++i;
        size_t digits = i;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) ++i;
        if (i == digits) fail("expected integer");
        std::string body = s.substr(start, i - start);
        bool neg = body[0] == '-' || (unsigned char)body[0] == 0xE2;
        Int v = 0;
        for (char ch : body)
            if (std::isdigit((unsigned char)ch)) v = v * 10 + (ch - '0');
        return neg ? -v : v;
    }

    GramLattice atom() {
        skip();
        if (eat('<')) {
            Int e = integer();
            if (!eat('>')) fail("expected '>'");
            if (e % 2 != 0) fail("<e> must be even");
            return lattices::rank1(e);
        }
        if (s.compare(i, 6, "PhiG1(") == 0) {
            i += 6;
            Int x = integer();
            if (!eat(')')) fail("expected ')'");
            return lattices::phi_genus1(x);
        }
        if (s.compare(i, 4, "Phi(") == 0) {
            i += 4;
            Int x = integer();
            if (!eat(')')) fail("expected ')'");
            return lattices::phi(x);
        }
        if (i < s.size() && s[i] == 'U') {
            ++i;
            if (eat('(')) {
                Int m = integer();
                if (!eat(')')) fail("expected ')'");
                return lattices::U_scaled(m);
            }
            return lattices::U();
        }
        if (i < s.size() && s[i] == 'L') {
            ++i;
            if (!eat('(')) fail("expected '(' after L");
            Int d = integer();
            if (!eat(')')) fail("expected ')'");
            return lattices::lambda(d);
        }
        if (i < s.size() && s[i] == 'G') {
            ++i;
            if (!eat('(')) fail("expected '(' after G");
            Int b = integer();
            if (!eat(',')) fail("expected ','");
            Int c = integer();
            if (!eat(')')) fail("expected ')'");
            return lattices::gamma(b, c);
        }
        fail("unknown lattice atom");
    }
};

bool matches(const GramLattice& L, const GramLattice& M) { return L == M; }

} // namespace

GramLattice parse_descriptor(const std::string& text) {
    DescParser p(text);
    GramLattice L = p.atom();
    p.skip();
    while (p.i < text.size()) {
        if (!p.eat('+')) p.fail("expected '+'");
        GramLattice R = p.atom();
        L = lattices::direct_sum(L, R);
        p.skip();
    }
    return L;
}

std::string print_descriptor(const GramLattice& L) {
    // Recognize conventional shapes; fall back to a <..> sum or raw JSON note.
    if (L.rank == 2) {
        if (matches(L, lattices::U())) return "U";
        if (L.g[0][0] == 0 && L.g[1][1] == 0 && L.g[0][1] >= 2)
            return "U(" + std::to_string(L.g[0][1]) + ")";
        if (L.g[0][0] == 0 && L.g[0][1] >= 1)
            return "G(" + std::to_string(L.g[0][1]) + "," + std::to_string(L.g[1][1] / 2) + ")";
    }
    if (L.rank == 3) {
        if (L.g[0][0] == 0 && L.g[0][1] == 1 && L.g[0][2] == 0 && L.g[1][1] == 0 &&
            L.g[1][2] == 0 && L.g[2][2] < 0 && L.g[2][2] % 2 == 0)
            return "L(" + std::to_string(-L.g[2][2] / 2) + ")";
        if (L.g[0][0] == 0 && L.g[0][1] == 1 && L.g[0][2] == 2 && L.g[1][1] == -2 &&
            L.g[2][2] == -2)
            return "Phi(" + std::to_string(L.g[1][2]) + ")";
        if (L.g[0][0] == 0 && L.g[0][1] == 1 && L.g[0][2] == 2 && L.g[1][1] == -2 &&
            L.g[2][2] == 0)
            return "PhiG1(" + std::to_string(L.g[1][2]) + ")";
    }
    bool diagonal = true;
    for (int i = 0; i < L.rank; ++i)
        for (int j = 0; j < L.rank; ++j)
            if (i != j && L.g[i][j] != 0) diagonal = false;
    if (diagonal) {
        std::string out;
        for (int i = 0; i < L.rank; ++i) {
            if (i) out += "+";
            out += "<" + std::to_string(L.g[i][i]) + ">";
        }
        return out;
    }
    return gram_json(L);
}

std::string gram_json(const GramLattice& L) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < L.rank; ++i) {
        os << (i ? "," : "") << "[";
        for (int j = 0; j < L.rank; ++j) os << (j ? "," : "") << L.g[i][j];
        os << "]";
    }
    os << "]";
    return os.str();
}

} // namespace k3mw
