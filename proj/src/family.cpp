#include "k3mw/family.hpp"

namespace k3mw {

const char* to_string(RankJumpStatus s) {
    switch (s) {
        case RankJumpStatus::JumpOverK: return "JUMP_OVER_K";
        case RankJumpStatus::PotentialDeg2: return "POTENTIAL_DEG2";
        case RankJumpStatus::PotentialUnspecified: return "POTENTIAL_UNSPECIFIED";
        case RankJumpStatus::NotEstablished: return "NOT_ESTABLISHED";
    }
    return "?";
}

GramLattice fibration_basis_lattice(Int d) {
    if (d < 1) throw std::domain_error("family parameter d must be >= 1");
    return make_from_rows({{0, 1, 0}, {1, -2, 0}, {0, 0, -2 * d}},
                          {BasisLabel::F, BasisLabel::O, BasisLabel::B3});
}

FamilyReport classify_family(Int d) {
    if (d < 1) throw std::domain_error("family parameter d must be >= 1");
    FamilyReport r;
    r.d = d;
    r.mw_rank = d == 1 ? 0 : 1;
    if (d >= 2) r.mw_generator_meets_zero = d - 2;
    r.has_reducible_fiber = (d == 1);
    r.torsion_trivial = true;
    r.unique_fibration = (d == 1 || d == 2 || d == 3 || d == 5 || d == 7 || d == 13);

    if (d >= 5 && d % 2 == 1)
        r.rational_bisection = RationalBisectionInfo{(d - 5) / 2, true,
                                                     mod_floor((d + 3) / 2, 4)};
    if (d >= 4 && d % 2 == 0)
        r.genus1_bisection = Genus1BisectionInfo{(d - 4) / 2, true};

    for (Int m = 2; m * m <= d; ++m) {
        if ((d - 1) % m == 0 && d >= m * m + 1) {
            Int x = (d - 1 - m * m) / m;
            if (x >= 0) r.multisections.push_back({m, 0, x});
        }
        if (d % m == 0 && d >= m * m) {
            Int x = (d - m * m) / m;
            if (x >= 0) r.multisections.push_back({m, 1, x});
        }
    }

    if (d >= 7 && d % 4 == 3) r.rank_jump_status = RankJumpStatus::JumpOverK;
    else if ((d >= 5 && d % 4 == 1) || (d % 2 == 0 && d >= 4))
        r.rank_jump_status = RankJumpStatus::PotentialDeg2;
    else if (d == 1) r.rank_jump_status = RankJumpStatus::PotentialUnspecified;
    else r.rank_jump_status = RankJumpStatus::NotEstablished;
    return r;
}

DivisorClass section_class(Int d, Int n) {
    if (d < 2) throw std::domain_error("Mordell-Weil group is trivial for d=1: no S_n");
    return DivisorClass::of(fibration_basis_lattice(d), {d * n * n, 1, n});
}

DivisorClass bisection_class(Int d) {
    if (d <= 3)
        throw std::domain_error(
            "no irreducible bisection class for d <= 3 (it splits into sections)");
    Int a = d % 2 == 1 ? (d + 3) / 2 : (d + 4) / 2;
    return DivisorClass::of(fibration_basis_lattice(d), {a, 2, 1});
}

PairingWithResidue bisection_section_pairing(Int d, Int n) {
    if (d < 5 || d % 2 == 0)
        throw std::domain_error("bisection-section pairing needs odd d >= 5");
    Int v = (d + 3) / 2 + 2 * d * n * (n - 1) - 4;
    return {v, mod_floor(v, 4)};
}

std::optional<MultisectionClass> multisection_class(Int d, Int m) {
    if (d < 1) throw std::domain_error("family parameter d must be >= 1");
    if (m < 2) throw std::domain_error("multisection degree must be >= 2");
    auto L = fibration_basis_lattice(d);
    if ((d - 1) % m == 0 && d >= m * m + 1) {
        Int x = (d - 1 - m * m) / m;
        return MultisectionClass{DivisorClass::of(L, {2 * m + x, m, 1}), 0, x};
    }
    if (d % m == 0 && d >= m * m) {
        Int x = (d - m * m) / m;
        return MultisectionClass{DivisorClass::of(L, {2 * m + x, m, 1}), 1, x};
    }
    return std::nullopt;
}

} // namespace k3mw
