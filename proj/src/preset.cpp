#include "k3mw/preset.hpp"

#include <algorithm>
#include <cctype>

namespace k3mw {

Int section_q(const SectionFamily& fam, const SectionIndex& idx) {
    switch (fam.kind) {
        case SectionFamilyKind::Rank3:
        case SectionFamilyKind::Rank4InB3:
            return fam.d * idx.a * idx.a;
        case SectionFamilyKind::Rank4InB4:
            return fam.gamma * idx.a * idx.a;
        case SectionFamilyKind::Rank4A:
            return fam.alpha * idx.a * idx.a - fam.beta * idx.a * idx.b +
                   fam.gamma * idx.b * idx.b;
        case SectionFamilyKind::Rank4BSplit: {
            Int j = idx.a;
            if (j % 2 == 0) {
                Int n = -j / 2;
                return (4 * fam.gamma - 1) * n * n;
            }
            Int n = (-j - 1) / 2;
            return (4 * fam.gamma - 1) * (n * n + n) + fam.gamma;
        }
    }
    throw std::logic_error("unreachable");
}

DivisorClass section_of(const SurfacePreset& p, const SectionIndex& idx) {
    Int q = section_q(p.family, idx);
    switch (p.family.kind) {
        case SectionFamilyKind::Rank3:
            return DivisorClass::of(p.lat, {q, 1, idx.a});
        case SectionFamilyKind::Rank4InB3:
            return DivisorClass::of(p.lat, {q, 1, idx.a, 0});
        case SectionFamilyKind::Rank4InB4:
            return DivisorClass::of(p.lat, {q, 1, 0, idx.a});
        case SectionFamilyKind::Rank4A:
            return DivisorClass::of(p.lat, {q, 1, idx.a, idx.b});
        case SectionFamilyKind::Rank4BSplit: {
            Int j = idx.a;
            Int n = j % 2 == 0 ? -j / 2 : (-j - 1) / 2;
            return DivisorClass::of(p.lat, {q, 1, n, j});
        }
    }
    throw std::logic_error("unreachable");
}

bool q_positive_definite(const SectionFamily& fam) {
    switch (fam.kind) {
        case SectionFamilyKind::Rank3:
        case SectionFamilyKind::Rank4InB3:
            return fam.d >= 1;
        case SectionFamilyKind::Rank4InB4:
            return fam.gamma >= 1;
        case SectionFamilyKind::Rank4A:
            return fam.alpha >= 1 && 4 * fam.alpha * fam.gamma - fam.beta * fam.beta > 0;
        case SectionFamilyKind::Rank4BSplit:
            return fam.gamma >= 1;
    }
    return false;
}

namespace {

Int zigzag(Int n) { return n == 0 ? 0 : (n > 0 ? 2 * n - 1 : -2 * n); }

} // namespace

std::vector<SectionIndex> enumerate_indices(const SectionFamily& fam, Int f_bound) {
    if (!q_positive_definite(fam))
        throw std::invalid_argument("invalid preset: section F-form is not positive definite");
    std::vector<SectionIndex> out;
    if (f_bound < 0) return out;
    if (fam.arity() == 1) {
        // Q grows at least quadratically in |index| for every 1-index family.
        Int step = 1;
        switch (fam.kind) {
            case SectionFamilyKind::Rank3:
            case SectionFamilyKind::Rank4InB3: step = fam.d; break;
            case SectionFamilyKind::Rank4InB4: step = fam.gamma; break;
            case SectionFamilyKind::Rank4BSplit: step = std::max<Int>(1, (4 * fam.gamma - 1) / 4); break;
            default: break;
        }
        Int nmax = 1;
        while (step * nmax * nmax <= f_bound) ++nmax;
        ++nmax;
        for (Int n = -nmax; n <= nmax; ++n)
            if (section_q(fam, {n, 0}) <= f_bound) out.push_back({n, 0});
    } else {
        // box bound from the positive definite form
        Int D = 4 * fam.alpha * fam.gamma - fam.beta * fam.beta;
        auto box = [&](Int coef) {
            Int m = 0;
            while (m * m * D <= 4 * coef * f_bound) ++m;
            return m + 1;
        };
        Int mb = box(fam.gamma), nb = box(fam.alpha);
        for (Int m = -mb; m <= mb; ++m)
            for (Int n = -nb; n <= nb; ++n)
                if (section_q(fam, {m, n}) <= f_bound) out.push_back({m, n});
    }
    std::sort(out.begin(), out.end(), [&](const SectionIndex& u, const SectionIndex& v) {
        Int qu = section_q(fam, u), qv = section_q(fam, v);
        if (qu != qv) return qu < qv;
        if (zigzag(u.a) != zigzag(v.a)) return zigzag(u.a) < zigzag(v.a);
        return zigzag(u.b) < zigzag(v.b);
    });
    return out;
}

std::vector<DivisorClass> enumerate_sections(const SurfacePreset& p, Int f_bound) {
    std::vector<DivisorClass> out;
    for (const auto& idx : enumerate_indices(p.family, f_bound)) {
        DivisorClass s = section_of(p, idx);
        if (self_pairing(s) != -2 || pair_value(s, p.fiber) != 1)
            throw std::logic_error("preset section fails S^2=-2, S.F=1");
        out.push_back(s);
    }
    return out;
}

namespace {

GramLattice rank4_lattice(Int g33, Int g34, Int g44) {
    return make_from_rows({{0, 1, 0, 0}, {1, -2, 0, 0}, {0, 0, g33, g34}, {0, 0, g34, g44}},
                          {BasisLabel::F, BasisLabel::O, BasisLabel::B3, BasisLabel::B4});
}

SurfacePreset base_preset(std::string name, GramLattice lat, SectionFamily fam) {
    SurfacePreset p;
    p.name = std::move(name);
    p.lat = lat;
    std::vector<Int> f(lat.rank, 0), o(lat.rank, 0);
    f[0] = 1;
    o[1] = 1;
    p.fiber = DivisorClass::of(lat, f);
    p.zero_section = DivisorClass::of(lat, o);
    p.family = fam;
    return p;
}

} // namespace

SurfacePreset preset_lambda(Int d) {
    if (d < 1) throw std::domain_error("preset L<d> needs d >= 1");
    SectionFamily fam;
    fam.kind = SectionFamilyKind::Rank3;
    fam.d = d;
    auto p = base_preset("L" + std::to_string(d), fibration_basis_lattice(d), fam);
    if (d == 1) {
        p.components.push_back(DivisorClass::of(p.lat, {0, 0, 1}));  // b3
        p.components.push_back(DivisorClass::of(p.lat, {1, 0, -1})); // F - b3
    }
    return p;
}

SurfacePreset preset_lambda_plus(Int d, Int c) {
    if (d < 2 || c < 1) throw std::domain_error("preset L<d>c<c> needs d >= 2, c >= 1");
    auto lat = rank4_lattice(-2 * d, 0, -2 * c);
    SectionFamily fam;
    if (c == 1) {
        fam.kind = SectionFamilyKind::Rank4InB3;
        fam.d = d;
    } else {
        fam.kind = SectionFamilyKind::Rank4A;
        fam.alpha = d;
        fam.beta = 0;
        fam.gamma = c;
    }
    auto p = base_preset("L" + std::to_string(d) + "c" + std::to_string(c), lat, fam);
    if (c == 1) p.components.push_back(DivisorClass::of(p.lat, {0, 0, 0, 1})); // b4 root
    return p;
}

SurfacePreset preset_case_a(Int alpha, Int beta, Int gamma) {
    auto lat = rank4_lattice(-2 * alpha, beta, -2 * gamma);
    SectionFamily fam;
    fam.kind = SectionFamilyKind::Rank4A;
    fam.alpha = alpha;
    fam.beta = beta;
    fam.gamma = gamma;
    return base_preset("A" + std::to_string(alpha) + "," + std::to_string(beta) + "," +
                           std::to_string(gamma),
                       lat, fam);
}

SurfacePreset preset_case_b_int(Int gamma, bool with_both_components) {
    if (gamma < 2) throw std::domain_error("case-b preset needs gamma >= 2");
    auto lat = rank4_lattice(-2, 0, -2 * gamma);
    SectionFamily fam;
    fam.kind = SectionFamilyKind::Rank4InB4;
    fam.gamma = gamma;
    auto p = base_preset("Bint" + std::to_string(gamma), lat, fam);
    p.components.push_back(DivisorClass::of(p.lat, {0, 0, 1, 0})); // b3 root
    if (with_both_components)
        p.components.push_back(DivisorClass::of(p.lat, {1, 0, -1, 0})); // F - b3
    return p;
}

SurfacePreset preset_case_b_split(Int gamma) {
    if (gamma < 2) throw std::domain_error("case-b preset needs gamma >= 2");
    auto lat = rank4_lattice(-2, -1, -2 * gamma);
    SectionFamily fam;
    fam.kind = SectionFamilyKind::Rank4BSplit;
    fam.gamma = gamma;
    auto p = base_preset("Bsplit" + std::to_string(gamma), lat, fam);
    p.components.push_back(DivisorClass::of(p.lat, {0, 0, 1, 0})); // b3 root
    return p;
}

SurfacePreset preset_by_name(const std::string& name) {
    auto num_at = [&](size_t pos, size_t* end) -> Int {
        size_t i = pos;
        bool neg = i < name.size() && name[i] == '-';
        if (neg) ++i;
        Int v = 0;
        size_t digits = i;
        while (i < name.size() && std::isdigit((unsigned char)name[i]))
            v = v * 10 + (name[i++] - '0');
        if (i == digits) throw std::invalid_argument("bad preset name: " + name);
        *end = i;
        return neg ? -v : v;
    };
    size_t end = 0;
    if (name.rfind("Bint", 0) == 0) return preset_case_b_int(num_at(4, &end));
    if (name.rfind("Bsplit", 0) == 0) return preset_case_b_split(num_at(6, &end));
    if (name.rfind("A", 0) == 0) {
        Int a = num_at(1, &end);
        if (end >= name.size() || name[end] != ',')
            throw std::invalid_argument("bad preset name: " + name);
        Int b = num_at(end + 1, &end);
        if (end >= name.size() || name[end] != ',')
            throw std::invalid_argument("bad preset name: " + name);
        Int g = num_at(end + 1, &end);
        return preset_case_a(a, b, g);
    }
    if (name.rfind("L", 0) == 0) {
        Int d = num_at(1, &end);
        if (end < name.size() && name[end] == 'c') {
            Int c = num_at(end + 1, &end);
            return preset_lambda_plus(d, c);
        }
        return preset_lambda(d);
    }
    throw std::invalid_argument("unknown preset name: " + name);
}

} // namespace k3mw
