#pragma once

#include <string>

#include "rrmono/ratliff_rush.hpp"

namespace rrmono {

// Staircase of I^n with the closure overlaid, in the (i, j) exponent plane
// clipped to [0, nd+d] on both axes.  '#' marks a minimal generator of I^n,
// '.' another member of I^n, '*' a point of the closure outside I^n.
std::string render_ascii(SumsetCache& cache, Int n, Int regR);

// Same picture as a self-contained SVG 1.1 document.
std::string render_svg(SumsetCache& cache, Int n, Int regR);

}  // namespace rrmono
