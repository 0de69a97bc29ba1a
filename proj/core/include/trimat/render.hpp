#pragma once

#include <string>

#include "trimat/tiler.hpp"

namespace trimat {

// SVG picture of a tiling: one merged polygon per tile, one dark triangle per
// hole (and per excluded down cell). Byte-identical output for equal tilings.
std::string render_svg(const Tiling& t);

// Plain-text picture, one row of glyphs per grid row, top row first:
//   '#' hole   'r' rhombus   '1' type-1 trapezoid   '2' type-2 trapezoid
//   'u' unit up   'v' unit down   '.' uncovered
std::string render_ascii(const Tiling& t);

}  // namespace trimat
