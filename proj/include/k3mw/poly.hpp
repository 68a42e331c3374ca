#pragma once

#include "k3mw/numeric.hpp"

#include <map>
#include <string>
#include <vector>

namespace k3mw {

using ExpVec = std::vector<int>;

// Sparse multivariate polynomial with exact rational coefficients over an
// ordered variable list. Zero coefficients are never stored.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Polynomial constant(std::vector<std::string> vars, const Rational& c);
    static Polynomial variable(std::vector<std::string> vars, const std::string& name);
    static Polynomial monomial(std::vector<std::string> vars, ExpVec e, const Rational& c);

    const std::vector<std::string>& vars() const { return vars_; }
    const std::map<ExpVec, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    int var_index(const std::string& name) const; // -1 if absent

    void add_term(const ExpVec& e, const Rational& c);

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Rational& c) const;
    bool operator==(const Polynomial& o) const {
        return vars_ == o.vars_ && terms_ == o.terms_;
    }

    Polynomial pow(int e) const;
    Polynomial derivative(int var) const;
    int degree(int var) const;       // -1 for the zero polynomial
    int total_degree() const;        // -1 for the zero polynomial
    bool is_homogeneous() const;     // zero counts as homogeneous

    Rational evaluate(const std::vector<Rational>& point) const;

    // Substitutes var -> value (a polynomial over the same variable list).
    Polynomial substitute(int var, const Polynomial& value) const;

    // Substitutes every variable simultaneously.
    Polynomial substitute_all(const std::vector<Polynomial>& values) const;

    // Exact division by var^k; throws unless every term has exponent >= k.
    Polynomial divide_by_var_power(int var, int k) const;

    // Coefficient of var^e, as a polynomial in the remaining variables
    // (same variable list, exponent zeroed).
    Polynomial coefficient_of(int var, int e) const;

    // Canonical printer: graded lexicographic term order.
    std::string str() const;

private:
    std::vector<std::string> vars_;
    std::map<ExpVec, Rational> terms_;
};

// Grammar:  expr := ['-'] term (('+'|'-') term)* ;  term := factor ('*' factor)* ;
// factor := rational | var ['^' nonneg-integer] ;  rational := integer ['/' posint].
// Throws std::domain_error with a position on syntax errors.
Polynomial parse_poly(const std::string& text, const std::vector<std::string>& vars);

// Determinant of a square matrix of polynomials (Laplace expansion; intended
// for small matrices).
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m);

// Resultant of p, q with respect to variable `var` (Sylvester determinant at
// formal degrees deg_var p, deg_var q).
Polynomial poly_resultant(const Polynomial& p, const Polynomial& q, int var);

} // namespace k3mw
