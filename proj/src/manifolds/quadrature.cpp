// SPDX-License-Identifier: Apache-2.0

#include "bcalc/manifolds/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace bcalc::geom {

namespace {

// Newton iteration on P_n from the Chebyshev-like initial guess.
GaussLegendre compute_rule(int n) {
  GaussLegendre rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      // p1 = P_n(x), p0 = P_{n-1}(x)
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    // Map [-1, 1] -> [0, 1]; ascending node order.
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = 0.5 * (1.0 - x);
    rule.nodes[hi] = 0.5 * (1.0 + x);
    rule.weights[lo] = 0.5 * w;
    rule.weights[hi] = 0.5 * w;
  }
  return rule;
}

}  // namespace

const GaussLegendre& gauss_legendre(int order) {
  if (order < 1 || order > 128) throw std::invalid_argument("Gauss-Legendre order must be in 1..128");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GaussLegendre>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[order];
  if (!slot) slot = std::make_unique<GaussLegendre>(compute_rule(order));
  return *slot;
}

std::size_t QuadratureRule::node_count(int param_dim) const {
  std::size_t n = 1;
  for (int i = 0; i < param_dim; ++i) n *= static_cast<std::size_t>(order);
  return n;
}

void QuadratureRule::for_each_node(int param_dim, const std::function<void(std::span<const double>, double)>& visit) const {
  if (param_dim == 0) {
    visit({}, 1.0);
    return;
  }
  const GaussLegendre& gl = gauss_legendre(order);
  std::vector<int> idx(static_cast<std::size_t>(param_dim), 0);
  std::vector<double> u(static_cast<std::size_t>(param_dim));
  const std::size_t total = node_count(param_dim);
  for (std::size_t k = 0; k < total; ++k) {
    double w = 1.0;
    for (std::size_t d = 0; d < idx.size(); ++d) {
      u[d] = gl.nodes[static_cast<std::size_t>(idx[d])];
      w *= gl.weights[static_cast<std::size_t>(idx[d])];
    }
    visit(u, w);
    for (std::size_t d = idx.size(); d-- > 0;) {
      if (++idx[d] < order) break;
      idx[d] = 0;
    }
  }
}

double observed_order(std::span<const double> h, std::span<const double> errors) {
  if (h.size() != errors.size() || h.size() < 2) throw std::invalid_argument("observed_order: need >= 2 matched samples");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    const double x = std::log(h[i]);
    const double y = std::log(errors[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

ConvergenceStudy convergence_study(const std::function<double(int)>& error_at, std::vector<int> orders, double floor) {
  if (orders.size() < 3) throw std::invalid_argument("convergence_study: need at least three orders");
  std::sort(orders.begin(), orders.end());
  ConvergenceStudy study;
  study.floor = floor;
  std::vector<double> xs, ys;
  for (int order : orders) {
    const double err = std::abs(error_at(order));
    study.points.push_back({order, err});
    if (err > floor) {
      xs.push_back(order);
      ys.push_back(err);
    }
  }
  study.at_floor = xs.empty();
  if (xs.size() >= 2) study.slope = observed_order(xs, ys);
  for (std::size_t i = 1; i < study.points.size(); ++i) {
    const auto& a = study.points[i - 1];
    const auto& b = study.points[i];
    if (a.error <= floor || b.error <= floor) continue;
    const double drop = a.error / b.error;
    study.min_drop = study.min_drop ? std::min(*study.min_drop, drop) : drop;
  }
  return study;
}

}  // namespace bcalc::geom
