// SPDX-License-Identifier: Apache-2.0

#include "bcalc/verify/identities.hpp"

#include <algorithm>
#include <random>

#include "bcalc/fields/derivative.hpp"
#include "bcalc/fields/polynomial.hpp"
#include "bcalc/manifolds/integrate.hpp"
#include "bcalc/manifolds/library.hpp"

namespace bcalc::verify {

namespace {

using calc::DerivativeScheme;
using calc::MultivectorPolynomial;
using calc::Point;
using ga::Algebra;

Point random_point(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Point x(n);
  for (int i = 0; i < n; ++i) x[i] = u(rng);
  return x;
}

// Nonzero random polynomial of the given grade.
MultivectorPolynomial nonzero_polynomial(std::mt19937_64& rng, Algebra alg, int max_degree, int grade) {
  for (;;) {
    MultivectorPolynomial p = calc::random_polynomial(rng, alg, max_degree, {grade});
    if (!p.empty()) return p;
  }
}

IdentityResult finish(std::string name, double worst, int samples, double tol) {
  return {std::move(name), worst, samples, tol, worst <= tol};
}

}  // namespace

std::vector<IdentityResult> identity_suite(const IdentitySuiteOptions& o) {
  std::mt19937_64 rng(o.seed);
  const DerivativeScheme nested = DerivativeScheme::nested();
  std::vector<IdentityResult> out;

  {
    const geom::Manifold loop = geom::named_manifold("unit_circle");
    double worst = 0.0;
    for (int k = 0; k < o.fields; ++k) {
      const MultivectorPolynomial phi = nonzero_polynomial(rng, Algebra(2), o.max_degree, 0);
      const auto grad = calc::gradient_field(phi.to_field("phi"));
      const double r = geom::integrate_directed(loop, geom::Pairing::Inner, grad, geom::QuadratureRule{}).norm();
      worst = std::max(worst, r / phi.coefficient_scale());
    }
    out.push_back(finish("closed_path_gradient", worst, o.fields, o.tolerance));
  }

  {
    double worst = 0.0;
    for (int k = 0; k < o.fields; ++k) {
      const MultivectorPolynomial phi = nonzero_polynomial(rng, Algebra(3), o.max_degree, 0);
      const auto grad = calc::gradient_field(phi.to_field("phi"), nested);
      for (int j = 0; j < o.points; ++j) {
        const double r = calc::curl(grad, random_point(rng, 3), nested).norm();
        worst = std::max(worst, r / phi.coefficient_scale());
      }
    }
    out.push_back(finish("curl_of_gradient", worst, o.fields * o.points, o.tolerance));
  }

  {
    double worst = 0.0;
    for (int k = 0; k < o.fields; ++k) {
      const MultivectorPolynomial a = nonzero_polynomial(rng, Algebra(3), o.max_degree, 1);
      const auto curl_a = calc::curl_vector_field(a.to_field("A"), nested);
      for (int j = 0; j < o.points; ++j) {
        const double r = std::abs(calc::divergence(curl_a, random_point(rng, 3), nested));
        worst = std::max(worst, r / a.coefficient_scale());
      }
    }
    out.push_back(finish("div_of_curl", worst, o.fields * o.points, o.tolerance));
  }

  {
    double worst = 0.0;
    for (int k = 0; k < o.fields; ++k) {
      const MultivectorPolynomial phi = nonzero_polynomial(rng, Algebra(3), o.max_degree, 0);
      const MultivectorPolynomial lap = phi.laplacian();
      const auto grad = calc::gradient_field(phi.to_field("phi"), nested);
      for (int j = 0; j < o.points; ++j) {
        const Point x = random_point(rng, 3);
        const double r = std::abs(calc::divergence(grad, x, nested) - lap.evaluate(x).scalar_part());
        worst = std::max(worst, r / phi.coefficient_scale());
      }
    }
    out.push_back(finish("laplacian", worst, o.fields * o.points, o.tolerance));
  }
  return out;
}

}  // namespace bcalc::verify
