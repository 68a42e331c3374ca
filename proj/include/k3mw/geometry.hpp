#pragma once

#include "k3mw/numberfield.hpp"
#include "k3mw/poly.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace k3mw {

using ProjPoint3 = std::array<Rational, 3>;
using ProjPoint4 = std::array<Rational, 4>;

// ---- Singularity classification ----------------------------------------------

enum class SingKind { Smooth, NodeA1, Degenerate };

struct SingularityClass {
    SingKind kind = SingKind::Smooth;
    // For NodeA1: the binary quadratic tangent form A uu^2 + B uv + C vv^2 in
    // the chart variables after translation.
    Rational A = 0, B = 0, C = 0;
    std::array<std::string, 2> chart_vars;
};

// Classifies a rational point on a homogeneous plane curve. The point must
// lie on the curve.
SingularityClass classify_singularity(const Polynomial& f, const ProjPoint3& p);

// ---- Quartic fibration model ---------------------------------------------------

// w^2 = a4(t) x^4 + a3(t) x^3 z + a2(t) x^2 z^2 + a1(t) x z^3 + a0(t) z^4,
// extracted from a nodal sextic via the pencil of lines y = t z through the
// node moved to (1:0:0).
struct FibrationModel {
    std::string base_parameter = "t";
    std::array<UPoly, 5> a; // a[i] multiplies x^i z^{4-i}
    Polynomial source_sextic;
    ProjPoint3 node;
};

FibrationModel fibration_from_node(const Polynomial& f, const ProjPoint3& node);

// Binary quartic invariants and discriminant (up to the conventional constant:
// disc = (4 I^3 - J^2)/27; we keep 4I^3 - J^2, same roots and multiplicities).
UPoly quartic_invariant_I(const std::array<UPoly, 5>& a);
UPoly quartic_invariant_J(const std::array<UPoly, 5>& a);
UPoly quartic_disc(const std::array<UPoly, 5>& a);

// ---- Singular fiber profile ----------------------------------------------------

enum class FiberType { I1, I2, II, Other };

const char* to_string(FiberType t);

struct FiberEntry {
    UPoly factor;            // irreducible over Q; for infinity, the formal "s"
    int disc_multiplicity = 0;
    std::vector<int> gcd_pattern; // root multiplicities of the quartic over Q[t]/(factor)
    FiberType type = FiberType::I1;
    int euler = 0;
    bool at_infinity = false;
};

struct FiberProfile {
    std::vector<FiberEntry> entries; // finite places, one per irreducible factor
    std::optional<FiberEntry> infinity_entry;
    Int euler_sum = 0;
};

FiberProfile fiber_profile(const FibrationModel& model);

// ---- Principal tangents and salience -------------------------------------------

struct PrincipalTangents {
    Rational A = 0, B = 0, C = 0; // tangent form A y^2 + B yz + C z^2
    BigInt disc_square_class = 0; // squarefree part of B^2 - 4AC (0 if square)
    bool rational_roots = false;
    std::vector<Rational> rational_params; // when split
    NumberFieldPtr field;                  // when irrational: Q[s]/(minimal poly)
    std::vector<NFElt> params;             // the two conjugate tangent parameters
    bool has_infinite_tangent = false;     // tangent z = 0 (parameter at infinity)
};

PrincipalTangents principal_tangents(const Polynomial& f, const ProjPoint3& node);

struct SalientReport {
    std::vector<bool> tangent_witnesses; // disc(t0) != 0 per tangent parameter
    bool overall = false;
    bool non_salient_specialization = false; // all tangents fail
};

SalientReport salient_check(const FibrationModel& model, const PrincipalTangents& tg);

// ---- Line restriction analysis --------------------------------------------------

struct LineIntersection {
    std::vector<int> multiplicities; // ascending, sums to 6
    // Rational intersection points when available, aligned with the rational
    // roots found (projective coordinates on the ambient plane).
    std::vector<std::pair<ProjPoint3, int>> rational_points;
    bool splits = false;
    BigInt split_square_class = 0; // c with splitting over Q(sqrt c); 1 for Q
    int geometric_genus = -1;      // when irreducible
    int node_count = -1;
};

// `line`: a linear form in the curve's variables. Throws if the line divides f.
LineIntersection line_split_analysis(const Polynomial& f, const Polynomial& line);

// ---- Double cover of P1 x P1 ----------------------------------------------------

enum class BisectionKind { SmoothGenus1, SingularRational, Degenerate };

struct Quadric44Report {
    std::vector<int> pattern; // intersection multiplicities with the (0,1)-line
    BisectionKind kind = BisectionKind::SmoothGenus1;
    bool salient = false; // no intersection x-value is a root of the x-ruling disc
};

// g: bidegree-(4,4) form in x0,x1,y0,y1; the line is gamma*y0 - delta*y1 = 0.
Quadric44Report quadric44_check(const Polynomial& g, const Rational& gamma,
                                const Rational& delta);

// ---- Quartics in P3: line pencils and trisections -------------------------------

struct TrisectionReport {
    std::vector<std::pair<ProjPoint4, int>> pattern; // points on the line, multiplicities
    int pattern_total = 0;
    bool ramified = false;     // some multiplicity >= 2
    bool cubic_smooth = false; // residual cubic smooth at this t
    bool salient = false;      // ramified and smooth
};

// F4 must contain the line {l1 = l2 = 0}; the pencil member is l1 = t0 * l2.
TrisectionReport quartic_line_pencil(const Polynomial& F4, const Polynomial& l1,
                                     const Polynomial& l2, const Rational& t0);

// Same at a parameter in a number field Q[t]/(m). The intersection pattern is
// exact over the field; smoothness of the residual cubic is certified through
// a good-reduction scan (a smooth reduction proves smoothness). Throws when
// no certificate is found.
TrisectionReport quartic_line_pencil(const Polynomial& F4, const Polynomial& l1,
                                     const Polynomial& l2, const NFElt& t0);

// Exact smoothness test for a ternary cubic over Q (partials have no common
// projective zero over the algebraic closure).
bool ternary_cubic_smooth(const Polynomial& cubic);

} // namespace k3mw
