// SPDX-License-Identifier: Apache-2.0

#include "bcalc/manifolds/integrate.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace bcalc::geom {

const char* pairing_name(Pairing p) {
  switch (p) {
    case Pairing::Geometric:
      return "geometric";
    case Pairing::Inner:
      return "inner";
    case Pairing::Outer:
      return "outer";
    case Pairing::Commutator:
      return "commutator";
  }
  return "?";
}

Multivector apply_pairing(Pairing p, const Multivector& measure, const Multivector& value) {
  switch (p) {
    case Pairing::Geometric:
      return ga::geometric_product(measure, value);
    case Pairing::Inner:
      return ga::inner_product(measure, value);
    case Pairing::Outer:
      return ga::outer_product(measure, value);
    case Pairing::Commutator:
      return ga::commutator_product(measure, value);
  }
  return ga::geometric_product(measure, value);
}

namespace {

struct Node {
  const Chart* chart;
  std::vector<double> u;
  double weight;
};

}  // namespace

Multivector integrate(const Manifold& m, const QuadratureRule& rule, const Integrand& integrand, int workers) {
  std::vector<Node> nodes;
  for (const auto& chart : m.charts()) {
    rule.for_each_node(chart.param_dim(), [&](std::span<const double> u, double w) {
      nodes.push_back({&chart, std::vector<double>(u.begin(), u.end()), w});
    });
  }

  const Algebra alg = m.algebra();
  std::vector<Multivector> values(nodes.size(), Multivector(alg));
  auto eval_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const DirectedMeasure dm = directed_measure(*nodes[i].chart, nodes[i].u, nodes[i].weight);
      values[i] = integrand(dm);
    }
  };

  const std::size_t nworkers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), 1, nodes.size() ? nodes.size() : 1);
  if (nworkers == 1) {
    eval_range(0, nodes.size());
  } else {
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(nworkers);
    const std::size_t chunk = (nodes.size() + nworkers - 1) / nworkers;
    for (std::size_t t = 0; t < nworkers; ++t) {
      const std::size_t b = t * chunk, e = std::min(nodes.size(), b + chunk);
      threads.emplace_back([&, t, b, e] {
        try {
          eval_range(b, e);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
    for (auto& th : threads) th.join();
    for (auto& err : errors) {
      if (err) std::rethrow_exception(err);
    }
  }

  Multivector sum(alg);
  for (std::size_t i = 0; i < nodes.size(); ++i) sum += values[i] * nodes[i].weight;
  return sum;
}

Multivector integrate_directed(const Manifold& m, Pairing pairing, const calc::FieldEvaluator& f,
                               const QuadratureRule& rule, int workers) {
  if (!(f.algebra() == m.algebra())) throw std::invalid_argument("integrate_directed: field and manifold algebras differ");
  return integrate(
      m, rule, [&](const DirectedMeasure& dm) { return apply_pairing(pairing, dm.mvector, f(dm.x)); }, workers);
}

Multivector directed_content(const Manifold& m, const QuadratureRule& rule) {
  return integrate(m, rule, [](const DirectedMeasure& dm) { return dm.mvector; });
}

double scalar_content(const Manifold& m, const QuadratureRule& rule) {
  const Algebra alg = m.algebra();
  return integrate(m, rule, [alg](const DirectedMeasure& dm) { return Multivector::scalar(alg, dm.mvector.norm()); })
      .scalar_part();
}

}  // namespace bcalc::geom
