#include "k3mw/geometry.hpp"

#include "k3mw/factor.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace k3mw {

namespace {

const std::vector<std::string> kXYZ = {"x", "y", "z"};

Polynomial rename_to_xyz(const Polynomial& f) {
    if (f.vars().size() != 3) throw std::invalid_argument("expected a ternary form");
    Polynomial g(kXYZ);
    for (const auto& [e, c] : f.terms()) g.add_term(e, c);
    return g;
}

// Move a rational projective point to (1:0:0): permutation putting a nonzero
// coordinate first, then a shear. Returns the transformed polynomial.
Polynomial move_point_to_origin_chart(const Polynomial& f0, const ProjPoint3& p) {
    Polynomial f = rename_to_xyz(f0);
    int lead = -1;
    for (int i = 0; i < 3; ++i)
        if (p[i] != 0) { lead = i; break; }
    if (lead < 0) throw std::invalid_argument("invalid projective point");
    std::array<Rational, 3> q = p;
    if (lead != 0) {
        // swap variables 0 <-> lead in f and in the point
        std::vector<Polynomial> sub;
        for (int i = 0; i < 3; ++i) {
            int j = i == 0 ? lead : (i == lead ? 0 : i);
            sub.push_back(Polynomial::variable(kXYZ, kXYZ[j]));
        }
        f = f.substitute_all(sub);
        std::swap(q[0], q[lead]);
    }
    Rational b = q[1] / q[0], c = q[2] / q[0];
    if (b != 0 || c != 0) {
        Polynomial X = Polynomial::variable(kXYZ, "x");
        Polynomial Y = Polynomial::variable(kXYZ, "y");
        Polynomial Z = Polynomial::variable(kXYZ, "z");
        f = f.substitute_all({X, Y + X * b, Z + X * c});
    }
    return f;
}

// Lowest-degree form of f(1, y, z) at the origin; returns (mindeg, A, B, C)
// where A y^2 + B yz + C z^2 is the quadratic part (valid when mindeg = 2).
struct ChartLowest {
    int mindeg = -1;
    Rational A = 0, B = 0, C = 0;
    bool chart_zero = false;
};

ChartLowest chart_lowest_form(const Polynomial& f_moved) {
    Polynomial one = Polynomial::constant(kXYZ, 1);
    Polynomial g = f_moved.substitute(0, one);
    ChartLowest out;
    if (g.is_zero()) {
        out.chart_zero = true;
        return out;
    }
    int mind = -1;
    for (const auto& [e, c] : g.terms()) {
        int s = e[1] + e[2];
        if (mind < 0 || s < mind) mind = s;
    }
    out.mindeg = mind;
    for (const auto& [e, c] : g.terms()) {
        if (e[1] + e[2] != 2) continue;
        if (e[1] == 2) out.A = c;
        else if (e[1] == 1) out.B = c;
        else out.C = c;
    }
    return out;
}

} // namespace

SingularityClass classify_singularity(const Polynomial& f, const ProjPoint3& p) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    if (!f.is_homogeneous()) throw std::invalid_argument("curve is not homogeneous");
    if (p[0] == 0 && p[1] == 0 && p[2] == 0)
        throw std::invalid_argument("invalid projective point");
    if (f.evaluate({p[0], p[1], p[2]}) != 0)
        throw std::domain_error("point not on curve");

    Polynomial moved = move_point_to_origin_chart(f, p);
    ChartLowest low = chart_lowest_form(moved);
    if (low.chart_zero) throw std::domain_error("curve vanishes identically on the chart");

    SingularityClass out;
    out.chart_vars = {"y", "z"};
    if (low.mindeg <= 1) {
        out.kind = SingKind::Smooth;
        return out;
    }
    if (low.mindeg == 2) {
        Rational disc = low.B * low.B - 4 * low.A * low.C;
        out.A = low.A;
        out.B = low.B;
        out.C = low.C;
        out.kind = disc != 0 ? SingKind::NodeA1 : SingKind::Degenerate;
        return out;
    }
    out.kind = SingKind::Degenerate;
    return out;
}

FibrationModel fibration_from_node(const Polynomial& f, const ProjPoint3& node) {
    auto cls = classify_singularity(f, node);
    if (cls.kind != SingKind::NodeA1)
        throw std::domain_error("base point is not a simple node");
    Polynomial moved = move_point_to_origin_chart(f, node);
    if (moved.total_degree() != 6)
        throw std::domain_error("fibration extraction expects a plane sextic");

    // substitute y = t z: term x^a y^b z^c -> x^a z^{b+c} t^b over vars {x,z,t}
    const std::vector<std::string> xzt = {"x", "z", "t"};
    Polynomial g(xzt);
    for (const auto& [e, c] : moved.terms()) g.add_term({e[0], e[1] + e[2], e[1]}, c);
    g = g.divide_by_var_power(1, 2); // node multiplicity 2 at (1:0:0)

    FibrationModel model;
    model.source_sextic = f;
    model.node = node;
    for (int i = 0; i <= 4; ++i) {
        Polynomial ci = g.coefficient_of(0, i).coefficient_of(1, 4 - i);
        // remaining variable: t
        std::vector<Rational> coeffs;
        for (const auto& [e, c] : ci.terms()) {
            if ((int)coeffs.size() <= e[2]) coeffs.resize(e[2] + 1, Rational(0));
            coeffs[e[2]] = c;
        }
        model.a[i] = UPoly(std::move(coeffs));
    }

    // round trip: sum_i a_i(y) x^i must equal moved(x, y, 1)
    Polynomial recon(kXYZ);
    for (int i = 0; i <= 4; ++i) {
        const UPoly& ai = model.a[i];
        for (int k = 0; k <= ai.deg(); ++k)
            if (ai.at(k) != 0) recon.add_term({i, k, 0}, ai.at(k));
    }
    Polynomial dehom = moved.substitute(2, Polynomial::constant(kXYZ, 1));
    if (!(recon == dehom))
        throw std::logic_error("fibration model failed the substitution round trip");
    return model;
}

UPoly quartic_invariant_I(const std::array<UPoly, 5>& a) {
    return a[4] * a[0] * Rational(12) - a[3] * a[1] * Rational(3) + a[2] * a[2];
}

UPoly quartic_invariant_J(const std::array<UPoly, 5>& a) {
    return a[4] * a[2] * a[0] * Rational(72) + a[3] * a[2] * a[1] * Rational(9) -
           a[4] * a[1] * a[1] * Rational(27) - a[0] * a[3] * a[3] * Rational(27) -
           a[2] * a[2] * a[2] * Rational(2);
}

UPoly quartic_disc(const std::array<UPoly, 5>& a) {
    UPoly I = quartic_invariant_I(a), J = quartic_invariant_J(a);
    return I * I * I * Rational(4) - J * J;
}

const char* to_string(FiberType t) {
    switch (t) {
        case FiberType::I1: return "I1";
        case FiberType::I2: return "I2";
        case FiberType::II: return "II";
        case FiberType::Other: return "other";
    }
    return "?";
}

namespace {

long long mod_inv_ll(long long a, long long p) {
    long long t = 0, nt = 1, r = p, nr = a % p;
    if (nr < 0) nr += p;
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
}

int gcd_deg_modp(std::vector<long long> a, std::vector<long long> b, long long p) {
    auto trim = [](std::vector<long long>& v) {
        while (!v.empty() && v.back() == 0) v.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        long long li = mod_inv_ll(b.back(), p);
        while (a.size() >= b.size()) {
            long long f = a.back() * li % p;
            size_t sh = a.size() - b.size();
            if (f)
                for (size_t i = 0; i < b.size(); ++i)
                    a[sh + i] = ((a[sh + i] - (__int128)f * b[i]) % p + p) % p;
            a.pop_back();
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return (int)a.size() - 1;
}

// Evaluate a rational polynomial at t0 mod p; false when p divides a
// denominator.
bool eval_coeff_modp(const UPoly& f, long long t0, long long p, long long* out) {
    long long acc = 0;
    for (int i = f.deg(); i >= 0; --i) {
        acc = acc * t0 % p;
        const Rational& c = f.at(i);
        BigInt dm = den(c) % p;
        if (dm == 0) return false;
        BigInt nm = num(c) % p;
        long long nl = (long long)nm;
        if (nl < 0) nl += p;
        acc = (acc + nl * mod_inv_ll((long long)dm, p)) % p;
    }
    *out = acc;
    return true;
}

// Root multiplicity pattern of the binary quartic sum a_i x^i z^{4-i} over
// the algebraic closure of Q[t]/(P), including the root at (1:0) when the
// x-degree drops. For large-degree P the generic case is settled through a
// modular specialization: a root t0 of P mod p can only merge roots, so a
// specialized pattern {2,1,1} together with the vanishing of the
// discriminant mod P pins the pattern over the field exactly.
std::vector<int> quartic_pattern_over(const NumberFieldPtr& K, const std::array<UPoly, 5>& a,
                                      bool* identically_zero) {
    const UPoly& P = K->modulus();
    std::array<UPoly, 5> rem;
    bool all_zero = true;
    for (int i = 0; i <= 4; ++i) {
        rem[i] = divmod(a[i], P).second;
        if (!rem[i].is_zero()) all_zero = false;
    }
    if (all_zero) {
        *identically_zero = true;
        return {};
    }
    *identically_zero = false;
    int deg_x = 4;
    while (deg_x >= 0 && rem[deg_x].is_zero()) --deg_x;
    int inf_mult = 4 - deg_x;

    if (P.deg() > 6 && deg_x >= 2 && inf_mult <= 2) {
        for (long long p : {10007LL, 10009LL, 10037LL, 10039LL, 10061LL, 10067LL, 10069LL,
                            10079LL}) {
            // a root of P mod p
            long long t0 = -1;
            for (long long cand = 0; cand < p && t0 < 0; ++cand) {
                long long v;
                if (!eval_coeff_modp(P, cand, p, &v)) break;
                if (v == 0) t0 = cand;
            }
            if (t0 < 0) continue;
            std::vector<long long> q(deg_x + 1);
            bool ok = true;
            for (int i = 0; i <= deg_x && ok; ++i) ok = eval_coeff_modp(a[i], t0, p, &q[i]);
            if (!ok || q[deg_x] == 0) continue;
            std::vector<long long> dq(deg_x);
            for (int i = 1; i <= deg_x; ++i) dq[i - 1] = (long long)(i % p) * q[i] % p;
            int g = gcd_deg_modp(q, dq, p);
            bool is211 = (inf_mult <= 1 && g == 1) || (inf_mult == 2 && g == 0);
            if (is211) return {2, 1, 1};
            break; // inconclusive specialization: take the exact path
        }
    }

    std::vector<NFElt> cs;
    for (int i = 0; i <= 4; ++i) cs.push_back(NFElt{K, rem[i]});
    KPoly q = kp_make(K, cs);
    std::vector<int> pattern = kp_multiplicity_pattern(q);
    if (inf_mult > 0) pattern.push_back(inf_mult);
    std::sort(pattern.rbegin(), pattern.rend());
    return pattern;
}

FiberType type_from_pattern(const std::vector<int>& pattern, int mult) {
    if (pattern == std::vector<int>{2, 1, 1} && mult == 1) return FiberType::I1;
    if (pattern == std::vector<int>{2, 2} && mult == 2) return FiberType::I2;
    if (pattern == std::vector<int>{3, 1} && mult == 2) return FiberType::II;
    return FiberType::Other;
}

int euler_of(FiberType t, int mult) {
    switch (t) {
        case FiberType::I1: return 1;
        case FiberType::I2: return 2;
        case FiberType::II: return 2;
        case FiberType::Other: return mult;
    }
    return mult;
}

} // namespace

FiberProfile fiber_profile(const FibrationModel& model) {
    UPoly disc = quartic_disc(model.a);
    if (disc.is_zero())
        throw std::domain_error("non-reduced model: identically vanishing discriminant");

    FiberProfile out;
    auto fac = factor_rational(disc);
    for (const auto& [P, mult] : fac.factors) {
        auto K = make_field(P, /*certify=*/false);
        FiberEntry e;
        e.factor = P;
        e.disc_multiplicity = mult;
        bool qzero = false;
        e.gcd_pattern = quartic_pattern_over(K, model.a, &qzero);
        e.type = qzero ? FiberType::Other : type_from_pattern(e.gcd_pattern, mult);
        e.euler = euler_of(e.type, mult);
        out.entries.push_back(e);
        out.euler_sum += (Int)P.deg() * e.euler;
    }

    // fiber at infinity: reverse with coefficient weights deg a_i <= 6-i, so
    // the reversed discriminant sits at degree 24.
    int inf_mult = 24 - disc.deg();
    if (inf_mult < 0)
        throw std::domain_error("coefficient degrees exceed the nodal-sextic bounds");
    if (inf_mult > 0) {
        std::array<UPoly, 5> rev;
        for (int i = 0; i <= 4; ++i) {
            if (model.a[i].deg() > 6 - i)
                throw std::domain_error("coefficient degrees exceed the nodal-sextic bounds");
            rev[i] = model.a[i].is_zero() ? UPoly() : model.a[i].reversed(6 - i);
        }
        FiberEntry e;
        e.at_infinity = true;
        e.factor = UPoly::x(); // formal local parameter s at infinity
        e.disc_multiplicity = inf_mult;
        auto K = make_field(UPoly::x(), /*certify=*/false); // Q itself via Q[s]/(s)
        bool qzero = false;
        e.gcd_pattern = quartic_pattern_over(K, rev, &qzero);
        e.type = qzero ? FiberType::Other : type_from_pattern(e.gcd_pattern, inf_mult);
        e.euler = euler_of(e.type, inf_mult);
        out.infinity_entry = e;
        out.euler_sum += e.euler;
    }
    return out;
}

PrincipalTangents principal_tangents(const Polynomial& f, const ProjPoint3& node) {
    auto cls = classify_singularity(f, node);
    if (cls.kind != SingKind::NodeA1)
        throw std::domain_error("principal tangents need a simple node");
    PrincipalTangents out;
    out.A = cls.A;
    out.B = cls.B;
    out.C = cls.C;
    Rational D = cls.B * cls.B - 4 * cls.A * cls.C;
    BigInt cls_int = squarefree_part(num(D) * den(D));
    out.disc_square_class = cls_int == 1 ? BigInt(0) : cls_int;

    if (cls.A == 0) {
        // tangents z = 0 (parameter at infinity) and B y + C z = 0
        out.has_infinite_tangent = true;
        out.rational_roots = true;
        out.rational_params = {-cls.C / cls.B};
        return out;
    }
    if (cls_int == 1) {
        // rational square: split tangents
        Rational root2 = Rational(isqrt_big(num(D)), isqrt_big(den(D)));
        out.rational_roots = true;
        out.rational_params = {(-cls.B + root2) / (2 * cls.A), (-cls.B - root2) / (2 * cls.A)};
        return out;
    }
    // minimal polynomial t^2 + (B/A) t + (C/A)
    UPoly m({cls.C / cls.A, cls.B / cls.A, Rational(1)});
    out.field = make_field(m);
    NFElt gen = nf_generator(out.field);
    out.params = {gen, nf_neg(gen) - nf_from_rational(out.field, cls.B / cls.A)};
    return out;
}

SalientReport salient_check(const FibrationModel& model, const PrincipalTangents& tg) {
    UPoly disc = quartic_disc(model.a);
    SalientReport rep;
    if (tg.rational_roots) {
        for (const auto& r : tg.rational_params)
            rep.tangent_witnesses.push_back(disc.eval(r) != 0);
        if (tg.has_infinite_tangent)
            rep.tangent_witnesses.push_back(disc.deg() == 24);
    } else {
        for (const auto& t0 : tg.params)
            rep.tangent_witnesses.push_back(!nf_eval_upoly(disc, t0).is_zero());
    }
    rep.overall = std::any_of(rep.tangent_witnesses.begin(), rep.tangent_witnesses.end(),
                              [](bool b) { return b; });
    rep.non_salient_specialization = !rep.overall;
    return rep;
}

namespace {

ProjPoint3 normalize_point(ProjPoint3 p) {
    BigInt l = 1;
    for (const auto& v : p) l = l / big_gcd(l, den(v)) * den(v);
    std::array<BigInt, 3> z;
    for (int i = 0; i < 3; ++i) z[i] = num(p[i]) * (l / den(p[i]));
    BigInt g = 0;
    for (const auto& v : z) g = big_gcd(g, v);
    if (g == 0) return p;
    for (int i = 0; i < 3; ++i)
        if (z[i] != 0) {
            if (z[i] < 0) g = -g;
            break;
        }
    for (int i = 0; i < 3; ++i) p[i] = Rational(z[i] / g);
    return p;
}

} // namespace

LineIntersection line_split_analysis(const Polynomial& f, const Polynomial& line) {
    if (f.vars() != line.vars()) throw std::invalid_argument("variable list mismatch");
    Polynomial fx = rename_to_xyz(f);
    Polynomial lx = rename_to_xyz(line);
    if (!fx.is_homogeneous() || fx.total_degree() != 6)
        throw std::invalid_argument("expected a plane sextic");
    if (!lx.is_homogeneous() || lx.total_degree() != 1)
        throw std::invalid_argument("expected a linear form");

    std::array<Rational, 3> l{};
    for (const auto& [e, c] : lx.terms())
        for (int i = 0; i < 3; ++i)
            if (e[i] == 1) l[i] = c;
    int piv = -1;
    for (int i = 0; i < 3; ++i)
        if (l[i] != 0) { piv = i; break; }
    if (piv < 0) throw std::invalid_argument("zero linear form");

    // two points spanning the line: e_j - (l_j / l_piv) e_piv for free j
    std::array<ProjPoint3, 2> span;
    int k = 0;
    for (int j = 0; j < 3; ++j) {
        if (j == piv) continue;
        ProjPoint3 pt{Rational(0), Rational(0), Rational(0)};
        pt[j] = 1;
        pt[piv] = -l[j] / l[piv];
        span[k++] = normalize_point(pt);
    }

    // restriction: g(u,v) = f(u P + v Q)
    const std::vector<std::string> uv = {"u", "v"};
    Polynomial U = Polynomial::variable(uv, "u"), V = Polynomial::variable(uv, "v");
    Polynomial gx(uv);
    {
        std::vector<Polynomial> values;
        for (int i = 0; i < 3; ++i) values.push_back(U * span[0][i] + V * span[1][i]);
        Polynomial fuv(uv);
        // substitute via evaluation of each term
        for (const auto& [e, c] : fx.terms()) {
            Polynomial t = Polynomial::constant(uv, c);
            for (int i = 0; i < 3; ++i)
                if (e[i]) t = t * values[i].pow(e[i]);
            fuv = fuv + t;
        }
        gx = fuv;
    }
    if (gx.is_zero()) throw std::domain_error("the line divides the sextic");

    // dehomogenize at v = 1
    UPoly h;
    {
        std::vector<Rational> coeffs;
        for (const auto& [e, c] : gx.terms()) {
            if ((int)coeffs.size() <= e[0]) coeffs.resize(e[0] + 1, Rational(0));
            coeffs[e[0]] = c;
        }
        h = UPoly(std::move(coeffs));
    }

    LineIntersection out;
    auto fac = factor_rational(h);
    for (const auto& [g, mult] : fac.factors) {
        for (int r = 0; r < g.deg(); ++r) out.multiplicities.push_back(mult);
        if (g.deg() == 1) {
            Rational root = -g.at(0) / g.at(1);
            ProjPoint3 pt;
            for (int i = 0; i < 3; ++i) pt[i] = span[0][i] * root + span[1][i];
            out.rational_points.push_back({normalize_point(pt), mult});
        }
    }
    int inf_mult = 6 - h.deg();
    if (inf_mult > 0) {
        out.multiplicities.push_back(inf_mult);
        out.rational_points.push_back({span[0], inf_mult});
    }
    std::sort(out.multiplicities.begin(), out.multiplicities.end());
    int total = std::accumulate(out.multiplicities.begin(), out.multiplicities.end(), 0);
    if (total != 6) throw std::logic_error("line restriction multiplicities do not sum to 6");

    out.splits = std::all_of(out.multiplicities.begin(), out.multiplicities.end(),
                             [](int m) { return m % 2 == 0; });
    if (out.splits) {
        // restriction = content * (square of an integer form); the splitting
        // field is Q(sqrt of the content's square class)
        Rational c = fac.content;
        out.split_square_class = squarefree_part(num(c) * den(c));
    } else {
        int odd = 0, even = 0;
        for (int m : out.multiplicities) (m % 2 ? odd : even)++;
        out.geometric_genus = (odd - 2) / 2;
        out.node_count = even;
    }
    return out;
}

Quadric44Report quadric44_check(const Polynomial& g, const Rational& gamma,
                                const Rational& delta) {
    if (g.vars().size() != 4) throw std::invalid_argument("expected variables x0,x1,y0,y1");
    for (const auto& [e, c] : g.terms())
        if (e[0] + e[1] != 4 || e[2] + e[3] != 4)
            throw std::invalid_argument("form is not of bidegree (4,4)");

    // restrict to gamma y0 - delta y1 = 0, i.e. (y0:y1) = (delta:gamma)
    UPoly q; // in x0, coefficient of x0^i x1^{4-i}
    {
        std::vector<Rational> coeffs(5, Rational(0));
        for (const auto& [e, c] : g.terms()) {
            Rational v = c;
            for (int k = 0; k < e[2]; ++k) v *= delta;
            for (int k = 0; k < e[3]; ++k) v *= gamma;
            coeffs[e[0]] += v;
        }
        q = UPoly(std::move(coeffs));
    }
    if (q.is_zero()) throw std::domain_error("the (0,1)-line is a component of the branch curve");

    Quadric44Report rep;
    auto fac = factor_rational(q);
    for (const auto& [h, mult] : fac.factors)
        for (int r = 0; r < h.deg(); ++r) rep.pattern.push_back(mult);
    if (4 - q.deg() > 0) rep.pattern.push_back(4 - q.deg());
    std::sort(rep.pattern.rbegin(), rep.pattern.rend());

    if (rep.pattern == std::vector<int>{1, 1, 1, 1}) rep.kind = BisectionKind::SmoothGenus1;
    else if (rep.pattern == std::vector<int>{2, 1, 1}) rep.kind = BisectionKind::SingularRational;
    else rep.kind = BisectionKind::Degenerate;

    // x-ruling discriminant: disc_y of g, a binary form of degree 24 in (x0,x1)
    std::array<Polynomial, 5> cy;
    const auto& vars = g.vars();
    for (int j = 0; j <= 4; ++j) cy[j] = g.coefficient_of(2, j).coefficient_of(3, 4 - j);
    Polynomial I = cy[4] * cy[0] * Rational(12) - cy[3] * cy[1] * Rational(3) + cy[2] * cy[2];
    Polynomial J = cy[4] * cy[2] * cy[0] * Rational(72) + cy[3] * cy[2] * cy[1] * Rational(9) -
                   cy[4] * cy[1] * cy[1] * Rational(27) - cy[0] * cy[3] * cy[3] * Rational(27) -
                   cy[2] * cy[2] * cy[2] * Rational(2);
    Polynomial DX = I * I * I * Rational(4) - J * J;
    (void)vars;

    if (DX.is_zero()) {
        rep.salient = false;
        return rep;
    }
    UPoly dx; // dehomogenized at x1 = 1
    {
        std::vector<Rational> coeffs;
        for (const auto& [e, c] : DX.terms()) {
            if ((int)coeffs.size() <= e[0]) coeffs.resize(e[0] + 1, Rational(0));
            coeffs[e[0]] += c;
        }
        dx = UPoly(std::move(coeffs));
    }
    bool common_at_infinity = q.deg() < 4 && dx.deg() < DX.total_degree();
    UPoly shared = gcd(q, dx);
    rep.salient = !common_at_infinity && shared.deg() == 0;
    return rep;
}

// ---- ternary cubic smoothness -------------------------------------------------

namespace {

// Evaluate a trivariate polynomial at (y0, 1, w) as a univariate in w.
UPoly eval_y_rational(const Polynomial& p, const Rational& y0) {
    std::vector<Rational> coeffs;
    for (const auto& [e, c] : p.terms()) {
        Rational v = c;
        for (int k = 0; k < e[0]; ++k) v *= y0;
        if ((int)coeffs.size() <= e[2]) coeffs.resize(e[2] + 1, Rational(0));
        coeffs[e[2]] += v;
    }
    return UPoly(std::move(coeffs));
}

// Same with y0 an abstract root of the field modulus.
KPoly eval_y_field(const Polynomial& p, const NumberFieldPtr& K) {
    NFElt gen = nf_generator(K);
    std::vector<NFElt> coeffs;
    for (const auto& [e, c] : p.terms()) {
        NFElt v = nf_from_rational(K, c);
        for (int k = 0; k < e[0]; ++k) v = v * gen;
        while ((int)coeffs.size() <= e[2]) coeffs.push_back(nf_from_rational(K, 0));
        coeffs[e[2]] = coeffs[e[2]] + v;
    }
    return kp_make(K, std::move(coeffs));
}

// gcd of the nonzero members; true in *all_zero when every member vanishes.
UPoly gcd_nonzero(const std::vector<UPoly>& v, bool* all_zero) {
    UPoly g;
    *all_zero = true;
    for (const auto& u : v) {
        if (u.is_zero()) continue;
        *all_zero = false;
        g = g.is_zero() ? u.monic() : gcd(g, u);
    }
    return g;
}

} // namespace

bool ternary_cubic_smooth(const Polynomial& cubic) {
    if (cubic.vars().size() != 3) throw std::invalid_argument("expected a ternary cubic");
    if (cubic.is_zero() || !cubic.is_homogeneous() || cubic.total_degree() != 3)
        throw std::invalid_argument("expected a nonzero homogeneous cubic");

    std::array<Polynomial, 3> Q = {cubic.derivative(0), cubic.derivative(1),
                                   cubic.derivative(2)};
    for (const auto& q : Q)
        if (q.is_zero()) return false; // a coordinate point is singular

    // point (0:0:1): all partials vanish there?
    {
        bool all0 = true;
        for (const auto& q : Q)
            if (q.evaluate({0, 0, 1}) != 0) all0 = false;
        if (all0) return false;
    }

    // pairwise resultants in w (variable index 2) for pairs that involve w
    std::vector<Polynomial> res;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            if (Q[i].degree(2) <= 0 && Q[j].degree(2) <= 0) continue;
            Polynomial R = poly_resultant(Q[i], Q[j], 2);
            if (R.is_zero()) return false; // shared positive-dimensional locus
            res.push_back(R);
        }
    if (res.empty()) return false; // all partials w-free: (0:0:1) is singular

    // candidate (1:0:*): all resultants vanish at (y,z) = (1,0)?
    {
        bool all0 = true;
        for (const auto& R : res)
            if (R.evaluate({1, 0, 0}) != 0) all0 = false;
        if (all0) {
            std::vector<UPoly> qs;
            for (const auto& q : Q) {
                // evaluate at (1, 0, w)
                std::vector<Rational> coeffs;
                for (const auto& [e, c] : q.terms()) {
                    if (e[1] != 0) continue;
                    if ((int)coeffs.size() <= e[2]) coeffs.resize(e[2] + 1, Rational(0));
                    coeffs[e[2]] += c;
                }
                qs.push_back(UPoly(std::move(coeffs)));
            }
            bool allz = false;
            UPoly gw = gcd_nonzero(qs, &allz);
            if (allz || gw.deg() >= 1) return false;
        }
    }

    // affine candidates: common roots of the resultants dehomogenized at z=1
    std::vector<UPoly> raff;
    for (const auto& R : res) {
        std::vector<Rational> coeffs;
        for (const auto& [e, c] : R.terms()) {
            if ((int)coeffs.size() <= e[0]) coeffs.resize(e[0] + 1, Rational(0));
            coeffs[e[0]] += c;
        }
        raff.push_back(UPoly(std::move(coeffs)));
    }
    bool allz = false;
    UPoly gaff = gcd_nonzero(raff, &allz);
    if (allz) return false;
    if (gaff.deg() == 0) return true;

    auto fac = factor_rational(gaff);
    for (const auto& [phi, mult] : fac.factors) {
        (void)mult;
        if (phi.deg() == 1) {
            Rational y0 = -phi.at(0) / phi.at(1);
            std::vector<UPoly> qs;
            for (const auto& q : Q) qs.push_back(eval_y_rational(q, y0));
            bool az = false;
            UPoly gw = gcd_nonzero(qs, &az);
            if (az || gw.deg() >= 1) return false;
        } else {
            auto K = make_field(phi, /*certify=*/false);
            std::vector<KPoly> qs;
            for (const auto& q : Q) qs.push_back(eval_y_field(q, K));
            KPoly gw;
            bool az = true, started = false;
            for (const auto& qq : qs) {
                if (qq.is_zero()) continue;
                az = false;
                gw = started ? kp_gcd(gw, qq) : qq;
                started = true;
            }
            if (az || gw.deg() >= 1) return false;
        }
    }
    return true;
}

// ---- quartic line pencils -------------------------------------------------------

namespace {

using Mat4Q = std::array<std::array<Rational, 4>, 4>;

Mat4Q invert4(const Mat4Q& m) {
    std::array<std::array<Rational, 8>, 4> a{};
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) a[i][j] = m[i][j];
        a[i][4 + i] = 1;
    }
    for (int col = 0; col < 4; ++col) {
        int piv = -1;
        for (int r = col; r < 4; ++r)
            if (a[r][col] != 0) { piv = r; break; }
        if (piv < 0) throw std::invalid_argument("coordinate change is singular");
        std::swap(a[piv], a[col]);
        Rational d = a[col][col];
        for (int j = 0; j < 8; ++j) a[col][j] /= d;
        for (int r = 0; r < 4; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (int j = 0; j < 8; ++j) a[r][j] -= f * a[col][j];
        }
    }
    Mat4Q inv;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) inv[i][j] = a[i][4 + j];
    return inv;
}

std::array<Rational, 4> linear_coeffs(const Polynomial& l) {
    if (l.vars().size() != 4 || l.total_degree() != 1 || !l.is_homogeneous())
        throw std::invalid_argument("expected a linear form in four variables");
    std::array<Rational, 4> out{};
    for (const auto& [e, c] : l.terms())
        for (int i = 0; i < 4; ++i)
            if (e[i] == 1) out[i] = c;
    return out;
}

ProjPoint4 normalize_point4(ProjPoint4 p) {
    BigInt l = 1;
    for (const auto& v : p) l = l / big_gcd(l, den(v)) * den(v);
    std::array<BigInt, 4> z;
    for (int i = 0; i < 4; ++i) z[i] = num(p[i]) * (l / den(p[i]));
    BigInt g = 0;
    for (const auto& v : z) g = big_gcd(g, v);
    if (g == 0) return p;
    for (int i = 0; i < 4; ++i)
        if (z[i] != 0) {
            if (z[i] < 0) g = -g;
            break;
        }
    for (int i = 0; i < 4; ++i) p[i] = Rational(z[i] / g);
    return p;
}

} // namespace

namespace {

// Shared setup for the line pencil: coordinate change sending the line to
// {X = Z = 0}, the containment check, and the residual cubic with the pencil
// parameter kept symbolic (variables Y, Z, W, t).
struct LinePencil {
    Mat4Q Minv{};
    Polynomial cubic; // in vars {Y, Z, W, t}

    static const std::vector<std::string>& yzwt() {
        static const std::vector<std::string> v = {"Y", "Z", "W", "t"};
        return v;
    }
};

LinePencil make_line_pencil(const Polynomial& F4, const Polynomial& l1,
                            const Polynomial& l2) {
    if (F4.vars().size() != 4) throw std::invalid_argument("expected a quartic in P3");
    if (!F4.is_homogeneous() || F4.total_degree() != 4)
        throw std::invalid_argument("expected a homogeneous quartic");
    auto r1 = linear_coeffs(l1), r2 = linear_coeffs(l2);

    // new coordinates: X = l1, Z = l2, completed by unit rows
    Mat4Q M{};
    for (int j = 0; j < 4; ++j) {
        M[0][j] = r1[j];
        M[2][j] = r2[j];
    }
    {
        int placed = 0;
        for (int cand = 0; cand < 4 && placed < 2; ++cand) {
            int row = placed == 0 ? 1 : 3;
            std::array<std::array<Rational, 4>, 4> rows{};
            int n = 0;
            rows[n++] = M[0];
            rows[n++] = M[2];
            if (placed == 1) rows[n++] = M[1];
            rows[n] = {};
            rows[n][cand] = 1;
            ++n;
            int rank = 0;
            for (int col = 0; col < 4 && rank < n; ++col) {
                int piv = -1;
                for (int r = rank; r < n; ++r)
                    if (rows[r][col] != 0) { piv = r; break; }
                if (piv < 0) continue;
                std::swap(rows[piv], rows[rank]);
                for (int r = 0; r < n; ++r) {
                    if (r == rank || rows[r][col] == 0) continue;
                    Rational f = rows[r][col] / rows[rank][col];
                    for (int j = 0; j < 4; ++j) rows[r][j] -= f * rows[rank][j];
                }
                ++rank;
            }
            if (rank == n) {
                M[row][cand] = 1;
                ++placed;
            }
        }
        if (placed < 2) throw std::invalid_argument("could not complete the coordinate change");
    }
    LinePencil lp;
    lp.Minv = invert4(M);

    const auto& vars = F4.vars();
    std::vector<Polynomial> values;
    for (int i = 0; i < 4; ++i) {
        Polynomial v(vars);
        for (int j = 0; j < 4; ++j) {
            if (lp.Minv[i][j] == 0) continue;
            ExpVec e(4, 0);
            e[j] = 1;
            v.add_term(e, lp.Minv[i][j]);
        }
        values.push_back(v);
    }
    Polynomial G = F4.substitute_all(values);

    Polynomial onLine = G.substitute(0, Polynomial(vars)).substitute(2, Polynomial(vars));
    if (!onLine.is_zero()) throw std::domain_error("the line does not lie on the quartic");

    // X -> t Z with a symbolic parameter, divide once by Z:
    // term X^a Y^b Z^c W^d  ->  t^a Y^b Z^{a+c-1} W^d
    Polynomial C(LinePencil::yzwt());
    for (const auto& [e, c] : G.terms()) {
        if (e[0] + e[2] < 1) throw std::logic_error("line containment left a Z-free term");
        C.add_term({e[1], e[0] + e[2] - 1, e[3], e[0]}, c);
    }
    if (C.is_zero()) throw std::domain_error("residual intersection is empty");
    lp.cubic = C;
    return lp;
}

// binary cubic b(Y, W; t) = C(Y, 0, W; t), coefficients of Y^i in Q[t]
std::array<UPoly, 4> pencil_line_cubic(const LinePencil& lp) {
    std::array<UPoly, 4> b{};
    std::array<std::vector<Rational>, 4> cs;
    for (const auto& [e, c] : lp.cubic.terms()) {
        if (e[1] != 0) continue;
        auto& v = cs[e[0]];
        if ((int)v.size() <= e[3]) v.resize(e[3] + 1, Rational(0));
        v[e[3]] += c;
    }
    for (int i = 0; i < 4; ++i) b[i] = UPoly(std::move(cs[i]));
    return b;
}

} // namespace

TrisectionReport quartic_line_pencil(const Polynomial& F4, const Polynomial& l1,
                                     const Polynomial& l2, const Rational& t0) {
    LinePencil lp = make_line_pencil(F4, l1, l2);

    // specialize t -> t0
    const std::vector<std::string> yzw = {"Y", "Z", "W"};
    Polynomial C(yzw);
    for (const auto& [e, c] : lp.cubic.terms()) {
        Rational v = c;
        for (int k = 0; k < e[3]; ++k) v *= t0;
        if (v != 0) C.add_term({e[0], e[1], e[2]}, v);
    }
    if (C.is_zero() || C.total_degree() != 3)
        throw std::domain_error("residual intersection is not a cubic");

    TrisectionReport rep;
    UPoly b;
    {
        std::vector<Rational> coeffs;
        for (const auto& [e, c] : C.terms()) {
            if (e[1] != 0) continue;
            if ((int)coeffs.size() <= e[0]) coeffs.resize(e[0] + 1, Rational(0));
            coeffs[e[0]] += c;
        }
        b = UPoly(std::move(coeffs)); // coefficient of Y^i W^{3-i}
    }
    if (b.is_zero()) throw std::domain_error("the line lies in the residual cubic");

    auto add_point = [&](const Rational& Y0, const Rational& W0, int mult) {
        ProjPoint4 orig{};
        for (int i = 0; i < 4; ++i) orig[i] = lp.Minv[i][1] * Y0 + lp.Minv[i][3] * W0;
        rep.pattern.push_back({normalize_point4(orig), mult});
        rep.pattern_total += mult;
        if (mult >= 2) rep.ramified = true;
    };

    auto fac = factor_rational(b);
    for (const auto& [g, mult] : fac.factors) {
        if (g.deg() == 1) add_point(-g.at(0) / g.at(1), 1, mult);
        else rep.pattern_total += g.deg() * mult; // conjugate points, no rational rep
        if (g.deg() > 1 && mult >= 2) rep.ramified = true;
    }
    if (3 - b.deg() > 0) add_point(1, 0, 3 - b.deg());
    if (rep.pattern_total != 3)
        throw std::logic_error("trisection pattern does not sum to 3");

    rep.cubic_smooth = ternary_cubic_smooth(C);
    rep.salient = rep.ramified && rep.cubic_smooth;
    return rep;
}

TrisectionReport quartic_line_pencil(const Polynomial& F4, const Polynomial& l1,
                                     const Polynomial& l2, const NFElt& t0) {
    LinePencil lp = make_line_pencil(F4, l1, l2);
    const auto& K = t0.K;

    // intersection with the line: binary cubic over K
    auto bfam = pencil_line_cubic(lp);
    std::vector<NFElt> bc;
    for (int i = 0; i < 4; ++i) bc.push_back(nf_eval_upoly(bfam[i], t0));
    KPoly b = kp_make(K, bc);
    if (b.is_zero()) throw std::domain_error("the line lies in the residual cubic");

    TrisectionReport rep;
    std::vector<int> pattern = kp_multiplicity_pattern(b);
    int inf_mult = 3 - b.deg();
    if (inf_mult > 0) pattern.push_back(inf_mult);
    for (int m : pattern) {
        rep.pattern_total += m;
        if (m >= 2) rep.ramified = true;
        // points live in the field; only multiplicities are reported
    }
    if (rep.pattern_total != 3)
        throw std::logic_error("trisection pattern does not sum to 3");

    // smoothness by good reduction: a prime p where the minimal polynomial
    // has a root and the specialized cubic is smooth over F_p certifies
    // smoothness over the field.
    const UPoly& m = K->modulus();
    bool certified = false;
    for (long long p : {101LL, 103LL, 107LL, 109LL, 113LL, 127LL, 131LL, 137LL, 139LL, 149LL}) {
        long long t0p = -1;
        bool usable = true;
        for (long long cand = 0; cand < p && t0p < 0; ++cand) {
            long long v;
            if (!eval_coeff_modp(m, cand, p, &v)) { usable = false; break; }
            if (v == 0) t0p = cand;
        }
        if (!usable || t0p < 0) continue;
        // reduce the cubic's (Y,Z,W)-coefficients at t = t0p
        std::map<std::array<int, 3>, long long> cc;
        bool ok = true;
        for (const auto& [e, c] : lp.cubic.terms()) {
            BigInt dv = den(c) % p;
            if (dv == 0) { ok = false; break; }
            BigInt nv = num(c) % p;
            long long nl = (long long)nv;
            if (nl < 0) nl += p;
            long long term = nl * mod_inv_ll((long long)dv, p) % p;
            for (int k = 0; k < e[3]; ++k) term = term * t0p % p;
            auto key = std::array<int, 3>{e[0], e[1], e[2]};
            cc[key] = ((cc[key] + term) % p + p) % p;
        }
        if (!ok) continue;
        auto eval_partial = [&](int var, long long Y, long long Z, long long W) {
            long long s = 0;
            for (const auto& [e, c] : cc) {
                if (!c || e[var] == 0) continue;
                long long v = c * (e[var] % p) % p;
                int ey = e[0] - (var == 0 ? 1 : 0);
                int ez = e[1] - (var == 1 ? 1 : 0);
                int ew = e[2] - (var == 2 ? 1 : 0);
                for (int k = 0; k < ey; ++k) v = v * Y % p;
                for (int k = 0; k < ez; ++k) v = v * Z % p;
                for (int k = 0; k < ew; ++k) v = v * W % p;
                s = (s + v) % p;
            }
            return s;
        };
        bool singular = false;
        auto probe = [&](long long Y, long long Z, long long W) {
            if (!singular && eval_partial(0, Y, Z, W) == 0 && eval_partial(1, Y, Z, W) == 0 &&
                eval_partial(2, Y, Z, W) == 0)
                singular = true;
        };
        for (long long Y = 0; Y < p && !singular; ++Y)
            for (long long Z = 0; Z < p && !singular; ++Z) probe(Y, Z, 1);
        for (long long Y = 0; Y < p && !singular; ++Y) probe(Y, 1, 0);
        probe(1, 0, 0);
        if (!singular) {
            rep.cubic_smooth = true;
            certified = true;
            break;
        }
    }
    if (!certified)
        throw std::runtime_error(
            "could not certify smoothness of the residual cubic at this parameter");
    rep.salient = rep.ramified && rep.cubic_smooth;
    return rep;
}

} // namespace k3mw
