#pragma once

#include "eulerlab/surfacereps.hpp"

namespace eulerlab {
namespace fixtures {

// Sanov pair a = [[1,2],[0,1]], b = [[1,0],[2,1]], marked as Gamma_{1,1}.
LiftedRep sanov_rep();

// Discrete faithful Mobius representation of the closed genus-2 group:
// a one-holed hyperbolic torus glued to its half-turn mirror image along
// the boundary geodesic, so the standard relator holds exactly in SL(2,R).
// Euler number -2.
LiftedRep geometric_genus2_rep();

// Two Sanov one-holed tori glued along their matching boundary geodesic;
// closed genus-2 representation with e = e1 + e2 (= 0 here: the Sanov pair
// is not a geometric punctured-torus pair).
LiftedRep glued_sanov_genus2_rep();

// Two different geometric one-holed tori with equal boundary traces,
// conjugated to share the boundary geodesic and glued; e = -2 = (-1) + (-1).
LiftedRep glued_mixed_genus2_rep();

// Geometric one-holed torus pair (orthogonal axes, tr a = tr b = 3);
// marked as Gamma_{1,1}, attains the Milnor-Wood bound.
LiftedRep square_torus_rep();

// Half-turn about a point on the axis of the hyperbolic matrix h.
Mat2 axis_half_turn(const Mat2& h);

} // namespace fixtures
} // namespace eulerlab
