#pragma once

#include <string>

#include "cabling/mountain_range.hpp"

namespace cabling::cli {

// One text row per tb from tb_max down to tb_floor: '^' peak, 'v' valley,
// '*' any other occupied lattice point.
std::string render_ascii(const MountainRange& range);

// Static SVG: lattice points, peaks as filled vertices, cone edges as
// diagonals, valleys annotated with their depth.
std::string render_svg(const MountainRange& range);

}  // namespace cabling::cli
