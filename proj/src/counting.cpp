#include "k3mw/counting.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace k3mw {

namespace {

void check_budget(const FieldTower& F, long long budget) {
    // q^2 + q + 1 character evaluations
    long long q = F.q();
    if (q > 100000 || q * q + q + 1 > budget)
        throw std::domain_error("evaluation budget exceeded for q = " + std::to_string(q));
}

long long nodes_or_throw(const Polynomial& f, const FieldTower& F, int jobs) {
    auto sing = singular_census(f, F, jobs);
    for (const auto& sp : sing)
        if (sp.kind != ModpSingKind::A1)
            throw std::domain_error("bad reduction: a singular point is not A1 at " +
                                    census_point_str(F, sp.point));
    return (long long)sing.size();
}

// Coefficients c_j(y) of z^j in f(1, y, z), evaluated per row.
struct RowEval {
    // terms grouped by z-exponent: (z_exp, coeff, y_exp)
    std::vector<std::array<long long, 3>> terms;
    int zmax = 0;
};

RowEval make_row_eval(const ReducedPoly& rp) {
    RowEval r;
    for (const auto& [c, e] : rp.terms) {
        r.terms.push_back({(long long)e[2], c, (long long)e[1]});
        r.zmax = std::max(r.zmax, e[2]);
    }
    return r;
}

long long row_sum(const FieldTower& F, const RowEval& rows, long long y) {
    // Horner in z with per-row cached coefficients
    std::vector<long long> cz(rows.zmax + 1, 0);
    for (const auto& [ze, c, ye] : rows.terms) {
        long long v = F.from_base(c);
        if (ye > 0) {
            if (y == 0) continue;
            v = F.mul(v, F.pow_elt(y, ye));
        }
        cz[ze] = F.add(cz[ze], v);
    }
    long long sum = 0;
    for (long long z = 0; z < F.q(); ++z) {
        long long acc = 0;
        for (int j = rows.zmax; j >= 0; --j) acc = F.add(F.mul(acc, z), cz[j]);
        sum += 1 + F.chi(acc);
    }
    return sum;
}

long long eval_full(const FieldTower& F, const ReducedPoly& rp,
                    const std::array<long long, 3>& pt) {
    long long total = 0;
    for (const auto& [c, e] : rp.terms) {
        long long v = F.from_base(c);
        bool zero = false;
        for (int i = 0; i < 3 && !zero; ++i) {
            if (e[i] == 0) continue;
            if (pt[i] == 0) zero = true;
            else v = F.mul(v, F.pow_elt(pt[i], e[i]));
        }
        if (!zero) total = F.add(total, v);
    }
    return total;
}

} // namespace

CountResult count_points(const Polynomial& f, const FieldTower& F, long long budget,
                         int jobs) {
    if (f.vars().size() != 3) throw std::invalid_argument("count expects a plane sextic");
    check_budget(F, budget);
    CountResult out;
    out.q = F.q();
    out.rational_nodes = nodes_or_throw(f, F, jobs);

    ReducedPoly rp = reduce_poly(f, F.p());
    RowEval rows = make_row_eval(rp);
    long long total = 0;
#ifdef _OPENMP
    int nt = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for reduction(+ : total) schedule(static) num_threads(nt)
#endif
    for (long long y = 0; y < F.q(); ++y) total += row_sum(F, rows, y);

    // x = 0 chart: points (0 : 1 : z) and (0 : 0 : 1)
    for (long long z = 0; z < F.q(); ++z)
        total += 1 + F.chi(eval_full(F, rp, {0, 1, z}));
    total += 1 + F.chi(eval_full(F, rp, {0, 0, 1}));

    out.raw_sum = total;
    out.corrected = total + out.q * out.rational_nodes;
    return out;
}

CountResult count_points_naive(const Polynomial& f, const FieldTower& F, long long budget) {
    if (f.vars().size() != 3) throw std::invalid_argument("count expects a plane sextic");
    if (F.q() * F.q() * F.q() > budget)
        throw std::domain_error("naive enumeration budget exceeded for q = " +
                                std::to_string(F.q()));
    CountResult out;
    out.q = F.q();
    out.rational_nodes = nodes_or_throw(f, F, 0);

    ReducedPoly rp = reduce_poly(f, F.p());
    long long total = 0;
    auto count_at = [&](const std::array<long long, 3>& pt) {
        long long v = eval_full(F, rp, pt);
        long long n = 0;
        for (long long w = 0; w < F.q(); ++w)
            if (F.mul(w, w) == v) ++n;
        total += n;
    };
    for (long long y = 0; y < F.q(); ++y)
        for (long long z = 0; z < F.q(); ++z) count_at({1, y, z});
    for (long long z = 0; z < F.q(); ++z) count_at({0, 1, z});
    count_at({0, 0, 1});

    out.raw_sum = total;
    out.corrected = total + out.q * out.rational_nodes;
    return out;
}

TraceReport trace_report(const Polynomial& f, long long p, int n_max, long long budget,
                         int jobs) {
    if (n_max < 1) throw std::domain_error("trace report needs n_max >= 1");
    TraceReport rep;
    rep.p = p;
    rep.note = "full degree-22 Frobenius data would need n up to 11; out of budget";
    // validate the whole range before counting anything
    for (int n = 1; n <= n_max; ++n) {
        BigInt q = pow_big(p, (unsigned)n);
        if (q * q + q + 1 > budget)
            throw std::domain_error("evaluation budget exceeded at n = " + std::to_string(n) +
                                    " (q = " + q.str() + ", budget " + std::to_string(budget) +
                                    ")");
    }
    for (int n = 1; n <= n_max; ++n) {
        FieldTower F(p, n);
        auto c = count_points(f, F, budget, jobs);
        TraceEntry e;
        e.q = c.q;
        e.count = c.corrected;
        e.trace = c.corrected - 1 - c.q * c.q;
        e.rational_nodes = c.rational_nodes;
        e.weil_ok = (e.trace < 0 ? -e.trace : e.trace) <= 22 * c.q;
        rep.entries[n] = e;
        if (!e.weil_ok) rep.weil_ok = false;
    }
    return rep;
}

} // namespace k3mw
