#pragma once

#include "polyorder/cone.hpp"
#include "polyorder/polytope.hpp"

namespace polyorder {
namespace fixtures {

/// K = [0, 1].
Polytope interval();
/// Standard triangle conv{(0,0), (1,0), (0,1)}.
Polytope triangle();
/// Unit square [0,1]^2.
Polytope unit_square();
/// Unit cube [0,1]^3.
Polytope unit_cube();
/// Trapezoid conv{(0,0), (2,0), (1,1), (0,1)}; not a parallelogram.
Polytope trapezoid();
/// Pyramid over the square base [-1,1]^2 at z = 0 with apex (0,0,1).
Polytope square_pyramid();
/// A convex pentagon.
Polytope pentagon();
/// Triangular prism: the standard triangle times [0, 1].
Polytope triangular_prism();

/// The quarter-disk cone generated by {x, y, alpha} with
/// alpha = 1 - (x + 3/5)^2 - (y + 3/5)^2, carrying its admissible point pair
/// ((0, 1/5), (0, -7/5)).
GeneratedCone disk_cone();

/// alpha itself.
SparsePoly disk_alpha();

}  // namespace fixtures
}  // namespace polyorder
