#pragma once

#include "k3mw/gf.hpp"

#include <string>
#include <vector>

namespace k3mw {

enum class ModpSingKind { A1, Degenerate };

struct ModpSingularPoint {
    std::array<long long, 3> point; // canonical representative (element codes)
    ModpSingKind kind = ModpSingKind::A1;
    std::array<long long, 3> tangent_form{}; // A u^2 + B uv + C v^2 over the field
};

// Exhaustive scan of P^2(F_q): points where f and all three partials vanish,
// classified by the lowest form at the point. OpenMP-parallel kernel; the
// serial reference is kept for testing.
std::vector<ModpSingularPoint> singular_census(const Polynomial& f, const FieldTower& F,
                                               int jobs = 0);
std::vector<ModpSingularPoint> singular_census_serial(const Polynomial& f,
                                                      const FieldTower& F);

std::string census_point_str(const FieldTower& F, const std::array<long long, 3>& pt);

} // namespace k3mw
