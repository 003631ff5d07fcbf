// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bcalc/manifolds/manifold.hpp"
#include "bcalc/unknown_id.hpp"

namespace bcalc::geom {

// Built-in cells. Curved directions are split into quarter-turn charts so
// Gauss-Legendre resolves trigonometric integrands at modest orders; Gauss
// nodes are interior, so polar and centre degeneracies are never sampled.

// [a, b] along e1 of R^n, tangent blade e1.
Manifold segment(double a, double b, int ambient_dim = 1);
// Closed counter-clockwise circle in the e12 plane of R^n.
Manifold circle(const Point& centre, double radius, int ambient_dim = 2);
// Disk in the e12 plane of R^n, tangent blade e12.
Manifold disk(const Point& centre, double radius, int ambient_dim = 2);
// r_in <= r <= r_out in the e12 plane, boundary = outer and inner circles.
Manifold annulus(const Point& centre, double r_in, double r_out, int ambient_dim = 2);
// Closed sphere in the e123 subspace of R^n (n = 3 or 4), measure I3 n |dS|.
Manifold sphere(const Point& centre, double radius, int ambient_dim = 3);
// Ball in the e123 subspace of R^n (n = 3 or 4), tangent blade e123.
Manifold ball(const Point& centre, double radius, int ambient_dim = 3);
// Closed torus about the e3 axis, outward orientation.
Manifold torus(double ring_radius = 2.0, double tube_radius = 0.5);
// Unit m-ball centred at `centre` in the e1..em subspace of R^n, m = 1, 2, 3.
Manifold unit_cell(const Point& centre, double radius, int cell_dim, int ambient_dim);

struct ManifoldInfo {
  std::string id;
  std::string description;
};

// Registry by id: segment01, unit_circle, unit_disk, annulus, unit_sphere,
// unit_sphere_r4, unit_ball, unit_ball_r4, torus. Throws UnknownId.
Manifold named_manifold(std::string_view id);
const std::vector<ManifoldInfo>& manifold_catalog();

}  // namespace bcalc::geom
