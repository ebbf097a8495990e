#pragma once

#include <string>

#include "troprank/convex.hpp"
#include "troprank/matrix.hpp"

namespace troprank {

/// SVG 1.1 drawing of the bounded cells of a 3-row matrix in the plane (x2 - x1, x3 - x1):
/// 0-cells as <circle>, 1-cells as <line>, 2-cells as <polygon>, plus a legend of types.
/// Throws DomainError unless m has three rows.
std::string render_hull_svg(const TropMatrix& m, const HullLimits& limits = {});

}  // namespace troprank
