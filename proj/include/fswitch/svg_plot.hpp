#pragma once

#include <string>
#include <vector>

#include "fswitch/curve.hpp"

namespace fswitch {

// Self-contained SVG: one polyline per curve, a shaded +-sigma band per
// curve, axes labeled in newtons, legend entries in input order.
std::string curves_to_svg(const std::vector<FrictionCurve>& curves);

} // namespace fswitch
