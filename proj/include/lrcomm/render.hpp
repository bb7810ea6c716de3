#pragma once

#include <string>

#include "hive.hpp"

namespace lrcomm {

// Text triangle: mu up the left edge, nu down the right edge, lambda along
// the base, U in the middle of each upright rhombus, '.' at vertices.
std::string render_ascii(const Hive& h);

// Edge-labelled triangle with fixed coordinates.
std::string render_svg(const Hive& h);

}  // namespace lrcomm
