#pragma once

#include "k3mw/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace k3mw {

struct PlaceSymbol {
    std::string place; // "real", "2", or an odd prime as decimal
    int symbol = 1;    // Hilbert symbol (-ab, -ac)_v
};

struct ConicResult {
    bool soluble = false;
    std::array<BigInt, 3> point{}; // primitive nonnegative solution when soluble
    std::vector<PlaceSymbol> symbols;
    std::optional<std::string> obstruction; // first failing place
};

// Hilbert symbol (a, b)_p for p = 0 (the real place), p = 2, or an odd prime.
int hilbert_symbol(BigInt a, BigInt b, const BigInt& p);

// Decides solvability of a x^2 + b y^2 + c z^2 = 0 over Q by the local
// symbols at the real place, 2, and the odd primes dividing abc; when
// soluble, finds a point by height search with a doubling bound.
ConicResult conic_point(const Rational& a, const Rational& b, const Rational& c);

} // namespace k3mw
