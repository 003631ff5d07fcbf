// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "bcalc/fields/field.hpp"
#include "bcalc/manifolds/quadrature.hpp"

namespace bcalc::calc {

// Coordinate-free derivative estimate
//   (I_m^{-1} / |cell|) * closed integral over the boundary of dx^{m-1} F
// on the m-ball of radius r about x, lying in the e1..em subspace of the
// field's R^n (m = n when cell_dim is 0). Approaches the tangential derivative
// for I_m = e1...em with O(r^2) error.
Multivector boundary_derivative_estimate(const FieldEvaluator& f, const Point& x, double radius,
                                         const geom::QuadratureRule& rule = {}, int cell_dim = 0);

}  // namespace bcalc::calc
