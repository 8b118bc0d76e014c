#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fancut/problem_io.hpp"

namespace fancut {

/// Deterministic SVG rendering of a problem: fan rays from a marked apex,
/// measure supports (measure 1 red, measure 2 blue), the solution wedge
/// shaded when present, and an optional traced-curve polyline.
std::string render_svg(const Problem& p, const std::optional<EquipartitionResult>& solution,
                       const std::vector<Vec2>& curve_overlay);

}  // namespace fancut
