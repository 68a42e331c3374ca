#pragma once

#include "k3mw/family.hpp"
#include "k3mw/lattice.hpp"

#include <string>
#include <vector>

namespace k3mw {

// Parametric description of the section classes of a preset.
enum class SectionFamilyKind {
    Rank3,       // S_n = d n^2 F + O + n b3
    Rank4A,      // P_{m,n} = (alpha m^2 - beta m n + gamma n^2) F + O + m b3 + n b4
    Rank4InB3,   // P_n = d n^2 F + O + n b3          (root lattice sits at b4)
    Rank4InB4,   // P_n = gamma n^2 F + O + n b4      (root lattice sits at b3)
    Rank4BSplit, // parity-split classes, non-integer MW discriminant
};

struct SectionFamily {
    SectionFamilyKind kind = SectionFamilyKind::Rank3;
    Int d = 0;
    Int alpha = 0, beta = 0, gamma = 0;

    int arity() const { return kind == SectionFamilyKind::Rank4A ? 2 : 1; }
};

// Section index: a single integer, or a pair (a,b) for the rank-2 MW case.
struct SectionIndex {
    Int a = 0, b = 0;
    bool operator==(const SectionIndex&) const = default;
};

struct SurfacePreset {
    std::string name;
    GramLattice lat; // basis {F, O, b3[, b4]}
    DivisorClass fiber;
    DivisorClass zero_section;
    std::vector<DivisorClass> components; // each of the form e_i or F - e_i
    SectionFamily family;
};

// F-coefficient of the section with the given index.
Int section_q(const SectionFamily& fam, const SectionIndex& idx);

DivisorClass section_of(const SurfacePreset& p, const SectionIndex& idx);

// Exact positive-definiteness of the F-coefficient form.
bool q_positive_definite(const SectionFamily& fam);

// All indices with Q <= f_bound, sorted by (Q, zigzag), zigzag order
// 0, 1, -1, 2, -2, ...
std::vector<SectionIndex> enumerate_indices(const SectionFamily& fam, Int f_bound);

// All section classes with F-coefficient <= f_bound, in index order; each is
// checked to satisfy S^2 = -2, S.F = 1.
std::vector<DivisorClass> enumerate_sections(const SurfacePreset& p, Int f_bound);

// ---- Named presets ----------------------------------------------------------

// Lambda_d in the fibration basis. d = 1 declares the I2-fiber components
// {b3, F - b3}.
SurfacePreset preset_lambda(Int d);

// Lambda_d + <-2c>. c = 1 declares the root component {b4}; c > 1 has rank-2
// Mordell-Weil with Q = d m^2 + c n^2.
SurfacePreset preset_lambda_plus(Int d, Int c);

// U + [[-2 alpha, beta],[beta, -2 gamma]] with rank-2 Mordell-Weil group.
SurfacePreset preset_case_a(Int alpha, Int beta, Int gamma);

// U + <-2> + <-2 gamma>, integer MW discriminant; declares {b3}, and also
// {F - b3} when with_both_components is set.
SurfacePreset preset_case_b_int(Int gamma, bool with_both_components = false);

// U + [[-2,-1],[-1,-2 gamma]], non-integer MW discriminant; declares {b3}.
SurfacePreset preset_case_b_split(Int gamma);

// Name grammar: L<d> | L<d>c<c> | A<alpha>,<beta>,<gamma> | Bint<gamma> |
// Bsplit<gamma>.
SurfacePreset preset_by_name(const std::string& name);

} // namespace k3mw
