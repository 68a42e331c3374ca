#pragma once

#include "k3mw/preset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3mw {

struct Decomposition {
    Int fiber_multiple = 0;
    std::vector<Int> component_multiples; // aligned with preset.components
    std::vector<SectionIndex> sections;   // multiset, search order
};

struct SplitVerdict {
    bool decomposed = false;
    std::optional<Decomposition> decomposition;
    Int q_cap = 0;            // F-coefficient bound used for the index region
    Int region_size = 0;      // number of section indices enumerated
};

// Exhaustive search for B = rF + sum z_j Theta_j + sum S_{nu_i}, all
// multiplicities >= 0, #sections = O-coefficient of B. First decomposition in
// lexicographic region order wins. A negative verdict certifies only
// non-decomposability into the declared generating set.
SplitVerdict split_check(const SurfacePreset& p, const DivisorClass& B);

// Independent brute-force enumerator over raw index range |n| <= n_bound,
// ignoring the Q-region. Same verdict contract.
SplitVerdict split_check_brute(const SurfacePreset& p, const DivisorClass& B,
                               Int n_bound);

// Reassembles a decomposition and compares with B.
bool decomposition_reassembles(const SurfacePreset& p, const Decomposition& dec,
                               const DivisorClass& B);

// ---- Table-1 audit ----------------------------------------------------------

enum class AuditKind { MwRank2, MwRank1, TrivialMw, NoOddClass, ProvenSplit, Undecided };

struct AuditEntry {
    std::string lattice_name;      // U + 2x2 block, as printed
    std::vector<std::vector<Int>> gamma_block;
    AuditKind kind = AuditKind::MwRank2;
    std::string preset_name;
    std::vector<std::vector<Int>> rebased_block; // when a basis change was applied
    std::vector<Int> class_coeffs;               // candidate B in the preset basis
    std::string verdict; // IRREDUCIBLE_BY_TEST | DECOMPOSES | TRIVIAL_MW |
                         // NO_ODD_CLASS | UNDECIDED
    std::optional<Decomposition> decomposition;
};

// Runs the eight Table-1 lattices plus the four remark lattices.
std::vector<AuditEntry> table1_audit();

} // namespace k3mw
