#pragma once

#include "k3mw/upoly.hpp"

namespace k3mw {

struct UFactorization {
    Rational content; // f = content * prod factors^mult, factors primitive over Z
    std::vector<std::pair<UPoly, int>> factors;
};

// Complete factorization over Q: squarefree decomposition, then per-part
// modular irreducibility shortcuts (Berlekamp nullity, degree-pattern
// intersection) with Hensel lifting and subset recombination as the general
// path. Factors come back primitive with positive leading coefficient,
// sorted by (degree, coefficients).
UFactorization factor_rational(const UPoly& f);

bool is_irreducible(const UPoly& f);

} // namespace k3mw
