#include "k3mw/census.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace k3mw {

namespace {

long long eval_reduced(const FieldTower& F, const ReducedPoly& rp,
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

struct CensusContext {
    ReducedPoly f;
    std::array<ReducedPoly, 3> d;
};

CensusContext make_context(const Polynomial& f, const FieldTower& F) {
    if (f.vars().size() != 3) throw std::invalid_argument("census expects a plane curve");
    if (F.q() > 100000)
        throw std::domain_error("census scan too large for q = " + std::to_string(F.q()));
    return {reduce_poly(f, F.p()),
            {reduce_poly(f.derivative(0), F.p()), reduce_poly(f.derivative(1), F.p()),
             reduce_poly(f.derivative(2), F.p())}};
}

bool is_singular_at(const CensusContext& ctx, const FieldTower& F,
                    const std::array<long long, 3>& pt) {
    if (eval_reduced(F, ctx.f, pt) != 0) return false;
    for (const auto& d : ctx.d)
        if (eval_reduced(F, d, pt) != 0) return false;
    return true;
}

// Classify a singular point by the quadratic part after translation in the
// chart of its first nonzero coordinate.
ModpSingularPoint classify_point(const CensusContext& ctx, const FieldTower& F,
                                 const std::array<long long, 3>& pt) {
    int lead = pt[0] != 0 ? 0 : (pt[1] != 0 ? 1 : 2);
    long long alpha = 0, beta = 0;
    {
        int k = 0;
        for (int i = 0; i < 3; ++i) {
            if (i == lead) continue;
            (k == 0 ? alpha : beta) = pt[i];
            ++k;
        }
    }
    auto binom = [](int a, int i) {
        long long r = 1;
        for (int k = 0; k < i; ++k) r = r * (a - k) / (k + 1);
        return r;
    };
    // order: 1, u, v, u^2, uv, v^2
    std::array<long long, 6> low{};
    for (const auto& [c, e] : ctx.f.terms) {
        int a = -1, b = -1;
        for (int i = 0; i < 3; ++i) {
            if (i == lead) continue;
            (a < 0 ? a : b) = e[i];
        }
        for (int i = 0; i <= 2 && i <= a; ++i)
            for (int j = 0; i + j <= 2 && j <= b; ++j) {
                long long coef = F.mul(F.from_base(c), F.from_base(binom(a, i) * binom(b, j)));
                if (a - i > 0) coef = F.mul(coef, F.pow_elt(alpha, a - i));
                if (b - j > 0) coef = F.mul(coef, F.pow_elt(beta, b - j));
                int slot = i == 0 && j == 0 ? 0
                           : i == 1 && j == 0 ? 1
                           : i == 0 && j == 1 ? 2
                           : i == 2           ? 3
                           : i == 1           ? 4
                                              : 5;
                low[slot] = F.add(low[slot], coef);
            }
    }
    ModpSingularPoint sp;
    sp.point = pt;
    sp.tangent_form = {low[3], low[4], low[5]};
    long long disc =
        F.sub(F.mul(low[4], low[4]), F.mul(F.from_base(4), F.mul(low[3], low[5])));
    sp.kind = disc != 0 ? ModpSingKind::A1 : ModpSingKind::Degenerate;
    return sp;
}

std::vector<ModpSingularPoint> classify_all(const CensusContext& ctx, const FieldTower& F,
                                            std::vector<std::array<long long, 3>> hits) {
    std::sort(hits.begin(), hits.end());
    std::vector<ModpSingularPoint> out;
    out.reserve(hits.size());
    for (const auto& pt : hits) out.push_back(classify_point(ctx, F, pt));
    return out;
}

} // namespace

std::vector<ModpSingularPoint> singular_census_serial(const Polynomial& f,
                                                      const FieldTower& F) {
    CensusContext ctx = make_context(f, F);
    std::vector<std::array<long long, 3>> hits;
    for (long long y = 0; y < F.q(); ++y)
        for (long long z = 0; z < F.q(); ++z)
            if (is_singular_at(ctx, F, {1, y, z})) hits.push_back({1, y, z});
    for (long long z = 0; z < F.q(); ++z)
        if (is_singular_at(ctx, F, {0, 1, z})) hits.push_back({0, 1, z});
    if (is_singular_at(ctx, F, {0, 0, 1})) hits.push_back({0, 0, 1});
    return classify_all(ctx, F, std::move(hits));
}

std::vector<ModpSingularPoint> singular_census(const Polynomial& f, const FieldTower& F,
                                               int jobs) {
    CensusContext ctx = make_context(f, F);
    std::vector<std::array<long long, 3>> hits;
#ifdef _OPENMP
    int nt = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel num_threads(nt)
    {
        std::vector<std::array<long long, 3>> local;
#pragma omp for schedule(static) nowait
        for (long long y = 0; y < F.q(); ++y)
            for (long long z = 0; z < F.q(); ++z)
                if (is_singular_at(ctx, F, {1, y, z})) local.push_back({1, y, z});
#pragma omp critical
        hits.insert(hits.end(), local.begin(), local.end());
    }
#else
    (void)jobs;
    for (long long y = 0; y < F.q(); ++y)
        for (long long z = 0; z < F.q(); ++z)
            if (is_singular_at(ctx, F, {1, y, z})) hits.push_back({1, y, z});
#endif
    for (long long z = 0; z < F.q(); ++z)
        if (is_singular_at(ctx, F, {0, 1, z})) hits.push_back({0, 1, z});
    if (is_singular_at(ctx, F, {0, 0, 1})) hits.push_back({0, 0, 1});
    return classify_all(ctx, F, std::move(hits));
}

std::string census_point_str(const FieldTower& F, const std::array<long long, 3>& pt) {
    (void)F;
    std::ostringstream os;
    os << "(" << pt[0] << ":" << pt[1] << ":" << pt[2] << ")";
    return os.str();
}

} // namespace k3mw
