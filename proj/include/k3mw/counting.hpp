#pragma once

#include "k3mw/census.hpp"

#include <map>
#include <optional>

namespace k3mw {

inline constexpr long long kDefaultBudget = 1000000000LL;

struct CountResult {
    long long q = 0;
    long long raw_sum = 0;        // sum over P^2(F_q) of 1 + chi(f(P))
    long long rational_nodes = 0; // F_q-rational A1 nodes of the branch sextic
    long long corrected = 0;      // raw_sum + q * rational_nodes
};

// Character-sum count of the double cover w^2 = f with A1 node corrections.
// Requires every singular point of the reduction over F_q to be A1 and the
// scan size q^2 + q + 1 to fit the budget. OpenMP kernel with a row-cached
// inner loop.
CountResult count_points(const Polynomial& f, const FieldTower& F,
                         long long budget = kDefaultBudget, int jobs = 0);

// Serial reference: literal enumeration of {(P, w) : w^2 = f(P)}.
CountResult count_points_naive(const Polynomial& f, const FieldTower& F,
                               long long budget = kDefaultBudget);

struct TraceEntry {
    long long q = 0;
    long long count = 0;
    long long trace = 0; // count - 1 - q^2
    long long rational_nodes = 0;
    bool weil_ok = false; // |trace| <= 22 q
};

struct TraceReport {
    long long p = 0;
    std::map<int, TraceEntry> entries; // n -> data
    bool weil_ok = true;
    // The full degree-22 Frobenius characteristic polynomial would need
    // counts through n = 11; that is far beyond the evaluation budget for
    // p >= 7, so only these truncated power sums are reported.
    std::string note;
};

TraceReport trace_report(const Polynomial& f, long long p, int n_max,
                         long long budget = kDefaultBudget, int jobs = 0);

} // namespace k3mw
