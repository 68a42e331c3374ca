#include "k3mw/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace k3mw {

Polynomial Polynomial::constant(std::vector<std::string> vars, const Rational& c) {
    Polynomial p(std::move(vars));
    p.add_term(ExpVec(p.vars_.size(), 0), c);
    return p;
}

Polynomial Polynomial::variable(std::vector<std::string> vars, const std::string& name) {
    Polynomial p(std::move(vars));
    int i = p.var_index(name);
    if (i < 0) throw std::invalid_argument("unknown variable: " + name);
    ExpVec e(p.vars_.size(), 0);
    e[i] = 1;
    p.add_term(e, 1);
    return p;
}

Polynomial Polynomial::monomial(std::vector<std::string> vars, ExpVec e, const Rational& c) {
    Polynomial p(std::move(vars));
    if (e.size() != p.vars_.size())
        throw std::invalid_argument("exponent vector length mismatch");
    p.add_term(e, c);
    return p;
}

int Polynomial::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return (int)i;
    return -1;
}

void Polynomial::add_term(const ExpVec& e, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("variable list mismatch");
    Polynomial r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Rational& k) const {
    Polynomial r(vars_);
    if (k == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * k);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (vars_ != o.vars_) throw std::invalid_argument("variable list mismatch");
    Polynomial r(vars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            ExpVec e = e1;
            for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

Polynomial Polynomial::pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    Polynomial r = constant(vars_, 1), base = *this;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Polynomial Polynomial::derivative(int var) const {
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        ExpVec d = e;
        d[var] -= 1;
        r.add_term(d, c * e[var]);
    }
    return r;
}

int Polynomial::degree(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

int Polynomial::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

bool Polynomial::is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        if (d < 0) d = s;
        else if (s != d) return false;
    }
    return true;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size()) throw std::invalid_argument("point dimension mismatch");
    Rational total = 0;
    for (const auto& [e, c] : terms_) {
        Rational v = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) v *= point[i];
        total += v;
    }
    return total;
}

Polynomial Polynomial::substitute(int var, const Polynomial& value) const {
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) {
        ExpVec rest = e;
        int k = rest[var];
        rest[var] = 0;
        Polynomial t = Polynomial::monomial(vars_, rest, c) * value.pow(k);
        r = r + t;
    }
    return r;
}

Polynomial Polynomial::substitute_all(const std::vector<Polynomial>& values) const {
    if (values.size() != vars_.size()) throw std::invalid_argument("substitution arity mismatch");
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) {
        Polynomial t = constant(vars_, c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = t * values[i].pow(e[i]);
        r = r + t;
    }
    return r;
}

Polynomial Polynomial::divide_by_var_power(int var, int k) const {
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] < k)
            throw std::domain_error("not divisible by " + vars_[var] + "^" + std::to_string(k));
        ExpVec d = e;
        d[var] -= k;
        r.terms_.emplace(d, c);
    }
    return r;
}

Polynomial Polynomial::coefficient_of(int var, int deg) const {
    Polynomial r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] != deg) continue;
        ExpVec d = e;
        d[var] = 0;
        r.add_term(d, c);
    }
    return r;
}

namespace {

std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << num(r);
    if (den(r) != 1) os << "/" << den(r);
    return os.str();
}

} // namespace

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    // graded lexicographic, highest first
    std::vector<std::pair<ExpVec, Rational>> ts(terms_.begin(), terms_.end());
    std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        int sa = 0, sb = 0;
        for (int x : a.first) sa += x;
        for (int x : b.first) sb += x;
        if (sa != sb) return sa > sb;
        return a.first > b.first;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : ts) {
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool any_var = false;
        for (int x : e)
            if (x > 0) any_var = true;
        if (!any_var || a != 1) {
            os << rational_str(a);
            if (any_var) os << "*";
        }
        bool started = false;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (started) os << "*";
            started = true;
            os << vars_[i];
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

// ---- Parser -----------------------------------------------------------------

namespace {

struct Parser {
    const std::string& s;
    const std::vector<std::string>& vars;
    size_t i = 0;
    Parser(const std::string& t, const std::vector<std::string>& v) : s(t), vars(v) {}

    [[noreturn]] void fail(const std::string& msg) const {
        throw std::domain_error("parse error at position " + std::to_string(i) + ": " + msg);
    }
    void skip() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool peek(char c) {
        skip();
        return i < s.size() && s[i] == c;
    }
    bool eat(char c) {
        if (peek(c)) { ++i; return true; }
        return false;
    }
    bool at_minus() {
        skip();
        if (i < s.size() && s[i] == '-') return true;
        // U+2212
        return i + 2 < s.size() && (unsigned char)s[i] == 0xE2 &&
               (unsigned char)s[i + 1] == 0x88 && (unsigned char)s[i + 2] == 0x92;
    }
    void eat_minus() {
        if (s[i] == '-') ++i;
        else i += 3;
    }

    BigInt digits() {
        skip();
        if (i >= s.size() || !std::isdigit((unsigned char)s[i])) fail("expected digits");
        BigInt v = 0;
        while (i < s.size() && std::isdigit((unsigned char)s[i])) {
            v = v * 10 + (s[i] - '0');
            ++i;
        }
        return v;
    }

    int nonneg_int() {
        BigInt v = digits();
        if (v > 1000000) fail("exponent too large");
        return (int)v;
    }

    Rational rational() {
        BigInt n = digits();
        if (eat('/')) {
            BigInt d = digits();
            if (d == 0) fail("zero denominator");
            return Rational(n, d);
        }
        return Rational(n);
    }

    std::string identifier() {
        skip();
        size_t start = i;
        while (i < s.size() && (std::isalnum((unsigned char)s[i]) || s[i] == '_')) ++i;
        if (i == start) fail("expected variable name");
        return s.substr(start, i - start);
    }

    Polynomial factor() {
        skip();
        if (i < s.size() && std::isdigit((unsigned char)s[i]))
            return Polynomial::constant(vars, rational());
        std::string name = identifier();
        int vi = -1;
        for (size_t k = 0; k < vars.size(); ++k)
            if (vars[k] == name) vi = (int)k;
        if (vi < 0) fail("unknown variable '" + name + "'");
        int e = 1;
        if (eat('^')) e = nonneg_int();
        ExpVec ev(vars.size(), 0);
        ev[vi] = e;
        return Polynomial::monomial(vars, ev, 1);
    }

    Polynomial term() {
        Polynomial p = factor();
        while (eat('*')) p = p * factor();
        return p;
    }

    Polynomial expr() {
        skip();
        bool neg = false;
        if (at_minus()) { eat_minus(); neg = true; }
        else eat('+');
        Polynomial p = term();
        if (neg) p = -p;
        while (true) {
            skip();
            if (i >= s.size()) break;
            if (at_minus()) {
                eat_minus();
                p = p - term();
            } else if (eat('+')) {
                p = p + term();
            } else {
                fail("expected '+' or '-'");
            }
        }
        return p;
    }
};

} // namespace

Polynomial parse_poly(const std::string& text, const std::vector<std::string>& vars) {
    Parser p(text, vars);
    return p.expr();
}

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m) {
    size_t n = m.size();
    if (n == 0) throw std::invalid_argument("empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("matrix is not square");
    if (n == 1) return m[0][0];
    Polynomial acc(m[0][0].vars());
    for (size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> sub;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Polynomial> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            sub.push_back(row);
        }
        Polynomial t = m[0][j] * poly_det(sub);
        acc = (j % 2 == 0) ? acc + t : acc - t;
    }
    return acc;
}

Polynomial poly_resultant(const Polynomial& p, const Polynomial& q, int var) {
    int dp = p.degree(var), dq = q.degree(var);
    if (dp < 0 || dq < 0) throw std::invalid_argument("resultant of a zero polynomial");
    std::vector<Polynomial> pc(dp + 1), qc(dq + 1);
    for (int e = 0; e <= dp; ++e) pc[e] = p.coefficient_of(var, e);
    for (int e = 0; e <= dq; ++e) qc[e] = q.coefficient_of(var, e);
    if (dp == 0) return p.is_zero() ? p : pc[0].pow(dq);
    if (dq == 0) return qc[0].pow(dp);
    size_t n = dp + dq;
    Polynomial zero(p.vars());
    std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, zero));
    for (int r = 0; r < dq; ++r)
        for (int e = 0; e <= dp; ++e) m[r][r + dp - e] = pc[e];
    for (int r = 0; r < dp; ++r)
        for (int e = 0; e <= dq; ++e) m[dq + r][r + dq - e] = qc[e];
    return poly_det(m);
}

} // namespace k3mw
