#pragma once

#include "k3mw/poly.hpp"

#include <string>

namespace k3mw {

// Curve file: a header line `vars: x y z`, then one polynomial expression.
Polynomial load_curve_file(const std::string& path);

struct QuarticBundle {
    Polynomial surface;                 // q1 f1 + q2 f2 + q3 f3, vars x y z w
    std::array<Polynomial, 3> q;
    std::array<Polynomial, 3> f;
};

// Loads the bundled quartic description (JSON with vars/q/f) and verifies the
// stated mod-2 and mod-3 congruences of the q_i before assembling the
// surface.
QuarticBundle load_quartic_bundle(const std::string& path);

// Directory containing the bundled data files, resolved from (in order) the
// K3_DATA_DIR environment variable, ./data, and the compiled-in source path.
std::string data_dir();

} // namespace k3mw
