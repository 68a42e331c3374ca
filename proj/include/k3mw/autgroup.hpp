#pragma once

#include "k3mw/family.hpp"

#include <set>
#include <string>
#include <vector>

namespace k3mw {

enum class GenName { Epsilon, T1, T1Inv };

GenName gen_from_string(const std::string& s); // "epsilon" | "T1" | "T1_inv"

// 3x3 generator matrix in the basis {F, O, b3}; acts on coefficient columns.
struct IsometryGen {
    GenName name;
    std::array<std::array<Int, 3>, 3> m{};
};

IsometryGen epsilon_gen();
IsometryGen t1_gen(Int d);
IsometryGen t1_inv_gen(Int d);

// True iff M^T G M = G for the Lambda_d form in the fibration basis.
bool preserves_gram(const IsometryGen& g, Int d);

// Applies the word left-to-right (first listed generator acts first).
// d = 1 rejects T1: the matrix is an isometry but maps the effective
// I2-component F - b3 to the non-effective class -F - b3.
DivisorClass apply_word(Int d, const std::vector<GenName>& word, const DivisorClass& v);

// Checks eps^2 = (T1 eps)^2 = id, eps T1 eps = T1^{-1}, and T1^n != id for
// 1 <= n <= 20.
bool verify_relations(Int d);

// All images of v under words of length <= radius over {eps, T1, T1^{-1}};
// every image is checked to keep v^2 and v.F.
std::set<DivisorClass> orbit(Int d, const DivisorClass& v, Int radius);

enum class Effectivity { PlausiblyEffective, NotEffective, Zero };

// Sign test against the reference class h = 3F + O for (-2)-classes.
// Throws on v.h = 0 (inconclusive).
Effectivity effectivity_test(Int d, const DivisorClass& v);

} // namespace k3mw
