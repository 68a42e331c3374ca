#pragma once

#include "k3mw/lattice.hpp"

#include <optional>
#include <vector>

namespace k3mw {

enum class RankJumpStatus { JumpOverK, PotentialDeg2, PotentialUnspecified, NotEstablished };

const char* to_string(RankJumpStatus s);

struct RationalBisectionInfo {
    Int x = 0;                       // (d-5)/2
    bool salient_generically = true;
    Int bs_parity = 0;               // (d+3)/2 mod 4
    bool operator==(const RationalBisectionInfo&) const = default;
};

struct Genus1BisectionInfo {
    Int x = 0;                       // (d-4)/2
    bool salient_generically = true;
    bool operator==(const Genus1BisectionInfo&) const = default;
};

struct MultisectionEntry {
    Int m = 0;
    int genus = 0;                   // 0 or 1
    Int x = 0;
    bool operator==(const MultisectionEntry&) const = default;
};

// Full classification record for the rank-3 family with parameter d.
struct FamilyReport {
    Int d = 0;
    int mw_rank = 0;                              // 0 or 1
    std::optional<Int> mw_generator_meets_zero;   // d-2, absent for d=1
    bool has_reducible_fiber = false;
    bool torsion_trivial = true;
    bool unique_fibration = false;
    std::optional<RationalBisectionInfo> rational_bisection;
    std::optional<Genus1BisectionInfo> genus1_bisection;
    std::vector<MultisectionEntry> multisections;
    RankJumpStatus rank_jump_status = RankJumpStatus::NotEstablished;
};

FamilyReport classify_family(Int d);

// Picard lattice in the fibration basis {F, O, b3}:
// F^2=0, F.O=1, O^2=-2, b3^2=-2d, mixed products 0.
GramLattice fibration_basis_lattice(Int d);

// S_n = d n^2 F + O + n b3; requires d >= 2.
DivisorClass section_class(Int d, Int n);

// Odd d: ((d+3)/2) F + 2O + b3 (B^2=-2); even d: ((d+4)/2) F + 2O + b3 (B^2=0).
// Requires d >= 4.
DivisorClass bisection_class(Int d);

struct PairingWithResidue {
    Int value = 0;
    Int residue_mod4 = 0;
};

// B.S_n = (d+3)/2 + 2dn(n-1) - 4 for odd d >= 5; residue is the class of
// the value mod 4, which equals (d-5)/2 mod 4 independently of n.
PairingWithResidue bisection_section_pairing(Int d, Int n);

struct MultisectionClass {
    DivisorClass cls;
    int genus = 0;
    Int x = 0;
};

// M = (2m+x) F + m O + b3 when d = m^2+mx+1 (genus 0) or d = m^2+mx (genus 1),
// x >= 0; nullopt otherwise.
std::optional<MultisectionClass> multisection_class(Int d, Int m);

} // namespace k3mw
