#pragma once

#include <string>
#include <vector>

#include "dimerlab/zigzag.hpp"

namespace dimerlab {

// Front arrangement on the unit-square fundamental domain: geodesics clipped
// to the square, with co-orientation hairs on the -normal side. Deterministic
// element order; coordinates are 6-digit decimal renderings of exact
// rationals.
std::string svg_fronts(const StackyFan& fan, const Rat& t, int width_px);

// Lattice polygon with the surrounding grid.
std::string svg_polygon(const std::vector<Vec2>& polygon, int width_px);

}  // namespace dimerlab
