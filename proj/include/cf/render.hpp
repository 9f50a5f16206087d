#pragma once
// Deterministic SVG figures: fan rays, subset-slope rays and their projection
// onto the circle.

#include <optional>
#include <string>

#include "cf/fan.hpp"
#include "cf/tangency.hpp"

namespace cf {

// Same input, byte-identical output (pure integer arithmetic throughout).
std::string render_svg(const Fan2D& fan, const std::optional<Tangency>& alpha);

}  // namespace cf
