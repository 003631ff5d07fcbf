// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace bcalc::geom {

// Gauss-Legendre nodes and weights mapped to [0, 1]; weights sum to 1.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Cached per order. Throws std::invalid_argument for order < 1 or > 128.
const GaussLegendre& gauss_legendre(int order);

// Tensor-product Gauss-Legendre rule on [0,1]^m, `order` nodes per axis. Exact
// for polynomials of degree <= 2 order - 1 in each parameter.
struct QuadratureRule {
  int order = 8;

  // Invokes visit(u, w) for each node in a fixed lexicographic order.
  void for_each_node(int param_dim, const std::function<void(std::span<const double>, double)>& visit) const;
  std::size_t node_count(int param_dim) const;
};

struct ConvergencePoint {
  int order = 0;
  double error = 0.0;
};

struct ConvergenceStudy {
  std::vector<ConvergencePoint> points;
  // Least-squares slope of log(error) against log(order) over points above the
  // floor; nullopt when fewer than two such points exist.
  std::optional<double> slope;
  // Smallest error ratio between consecutive points while both are above the floor.
  std::optional<double> min_drop;
  double floor = 0.0;
  bool at_floor = false;  // every error is at or below the floor
};

// Runs error_at for each order (ascending, at least three). Errors at or below
// `floor` are reported but excluded from the slope.
ConvergenceStudy convergence_study(const std::function<double(int)>& error_at, std::vector<int> orders,
                                   double floor = 1e-13);

// Observed order of accuracy from errors at resolutions h (any positive scale):
// least-squares slope of log(error) against log(h).
double observed_order(std::span<const double> h, std::span<const double> errors);

}  // namespace bcalc::geom
