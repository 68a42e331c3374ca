#pragma once

#include "k3mw/lattice.hpp"

#include <optional>

namespace k3mw {

// Unimodular base change P with P^T G1 P = G2, columns = images of the
// target basis written in the source basis.
struct IsometryWitness {
    int rank = 0;
    std::array<std::array<Int, kMaxRank>, kMaxRank> m{};

    Int at(int i, int j) const { return m[i][j]; }
};

Int det(const IsometryWitness& P);

// True iff |det P| = 1 and P^T G1 P = G2 entrywise.
bool verify_witness(const IsometryWitness& P, const GramLattice& L1,
                    const GramLattice& L2);

// Closed-form base changes first (bisection/multisection spans onto Lambda_d,
// Gamma_{2,1} onto <F,B>), then exhaustive column search with entries bounded
// by `bound`. Not-found is not a proof of non-isometry.
std::optional<IsometryWitness> isometry_witness(const GramLattice& L1,
                                                const GramLattice& L2,
                                                Int bound);

} // namespace k3mw
