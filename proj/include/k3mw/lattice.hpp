#pragma once

#include "k3mw/numeric.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace k3mw {

// Basis role tags. A lattice carries one tag per basis vector.
enum class BasisLabel { F, O, B3, B4, Generic };

inline constexpr int kMaxRank = 4;

// Even symmetric integer Gram matrix of rank 1..4 with labeled basis roles.
struct GramLattice {
    int rank = 0;
    std::array<std::array<Int, kMaxRank>, kMaxRank> g{};
    std::array<BasisLabel, kMaxRank> labels{};

    Int at(int i, int j) const { return g[i][j]; }

    bool operator==(const GramLattice& o) const {
        if (rank != o.rank) return false;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j)
                if (g[i][j] != o.g[i][j]) return false;
        return true;
    }
};

// Throws std::invalid_argument unless symmetric, even-diagonal, rank in 1..4,
// and non-generic labels are unique.
void validate(const GramLattice& L);

GramLattice make_from_rows(const std::vector<std::vector<Int>>& rows,
                           const std::vector<BasisLabel>& labels = {});

// Integer coefficient vector in a GramLattice basis.
struct DivisorClass {
    GramLattice lat;
    std::array<Int, kMaxRank> c{};

    static DivisorClass zero(const GramLattice& L) {
        DivisorClass v;
        v.lat = L;
        return v;
    }
    static DivisorClass of(const GramLattice& L, std::vector<Int> coeffs);

    Int operator[](int i) const { return c[i]; }

    bool operator==(const DivisorClass& o) const {
        return lat == o.lat && c == o.c;
    }
    bool operator<(const DivisorClass& o) const { return c < o.c; }

    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator*(Int k) const;
    DivisorClass operator-() const { return *this * -1; }
};

// v^T G w. Throws std::invalid_argument on lattice mismatch.
Int pair_value(const DivisorClass& v, const DivisorClass& w);

inline Int self_pairing(const DivisorClass& v) { return pair_value(v, v); }

// Adjunction genus (v^2 + 2)/2. Requires v^2 even and >= -2.
Int genus(const DivisorClass& v);

struct Signature {
    int n_plus = 0, n_minus = 0, n_zero = 0;
    bool operator==(const Signature&) const = default;
};

// Exact inertia by rational congruence diagonalization.
Signature signature(const GramLattice& L);

// Reduces c into [0, b) for Gamma_{b,c}; requires b >= 1.
std::pair<Int, Int> canonical_gamma(Int b, Int c);

// Converts a canonical c in [0,b) to the representative in [-1, b-2].
Int gamma_c_shifted_range(Int b, Int c);

// ---- Named lattice constructors (conventional bases) -----------------------

namespace lattices {

GramLattice U();                 // [[0,1],[1,0]]
GramLattice U_scaled(Int m);     // [[0,m],[m,0]], m >= 1
GramLattice rank1(Int twoe);     // <2e>: [[2e]], twoe even
GramLattice lambda(Int d);       // U + <-2d>, basis {u1,u2,b3}
GramLattice gamma(Int b, Int c); // [[0,b],[b,2c]]
GramLattice phi(Int x);          // [[0,1,2],[1,-2,x],[2,x,-2]], basis {F,O,B}
GramLattice phi_genus1(Int x);   // [[0,1,2],[1,-2,x],[2,x,0]]

// <F,O,M> for a degree-m multisection with M.O = x; M^2 = -2 (genus 0)
// or 0 (genus 1).
GramLattice multisection_span(Int m, Int x, int genus);

GramLattice direct_sum(const GramLattice& A, const GramLattice& B);

} // namespace lattices

// ---- Compact text descriptors ----------------------------------------------
// U | U(m) | L(d) | G(b,c) | <2e> | Phi(x) | PhiG1(x), joined with '+'.
GramLattice parse_descriptor(const std::string& text);
std::string print_descriptor(const GramLattice& L); // best-effort round trip

std::string gram_json(const GramLattice& L); // JSON array of integer rows

} // namespace k3mw
