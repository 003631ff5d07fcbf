// SPDX-License-Identifier: Apache-2.0

#include "bcalc/fields/boundary_limit.hpp"

#include <numbers>

#include "bcalc/manifolds/integrate.hpp"
#include "bcalc/manifolds/library.hpp"

namespace bcalc::calc {

Multivector boundary_derivative_estimate(const FieldEvaluator& f, const Point& x, double radius,
                                         const geom::QuadratureRule& rule, int cell_dim) {
  const int n = f.domain_dim();
  const int m = cell_dim == 0 ? n : cell_dim;
  if (m < 1 || m > 3 || m > n) throw std::invalid_argument("boundary_derivative_estimate: cell dimension must be 1..3");
  if (!(radius > 0.0)) throw std::invalid_argument("boundary_derivative_estimate: radius must be positive");

  const geom::Manifold cell = geom::unit_cell(x, radius, m, n);
  const geom::Manifold rim = geom::boundary_of(cell);
  const Multivector flux = geom::integrate_directed(rim, geom::Pairing::Geometric, f, rule);

  double volume = 0.0;
  switch (m) {
    case 1:
      volume = 2.0 * radius;
      break;
    case 2:
      volume = std::numbers::pi * radius * radius;
      break;
    default:
      volume = 4.0 / 3.0 * std::numbers::pi * radius * radius * radius;
      break;
  }
  return ga::geometric_product(ga::versor_inverse(*cell.tangent_blade()), flux) / volume;
}

}  // namespace bcalc::calc
