#pragma once

#include "surfknot/knots.hpp"

#include <vector>

namespace catalog {

using surfknot::SurfaceKnot;

/// Trefoil through its three-generator Wirtinger presentation.
SurfaceKnot trefoil_wirtinger();

/// Adds a redundant generator z = x_1 x_0 x_1^-1 (or z = x_0 for a one-generator knot).
SurfaceKnot tietze_extended(const SurfaceKnot& k);

/// Classical knots: 2-bridge knots and alternative presentations of them.
std::vector<SurfaceKnot> classical();

/// Ten surface knots used for the connected-sum suite.
std::vector<SurfaceKnot> surfaces();

}  // namespace catalog
