// SPDX-License-Identifier: Apache-2.0

#include "bcalc/verify/cases.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>

#include "bcalc/fields/registry.hpp"
#include "bcalc/manifolds/integrate.hpp"
#include "bcalc/manifolds/library.hpp"

namespace bcalc::verify {

namespace {

using calc::DerivativePart;
using ga::Algebra;
using ga::blade_of;
constexpr double kPi = std::numbers::pi;

Multivector scalar(int n, double v) { return Multivector::scalar(Algebra(n), v); }
Multivector blade(int n, ga::BladeIndex b, double c) { return Multivector::blade(Algebra(n), b, c); }

std::vector<CaseSpec> build_catalog() {
  std::vector<CaseSpec> cases;
  auto add = [&cases](CaseSpec s) { cases.push_back(std::move(s)); };

  add({.id = "C0",
       .title = "fundamental theorem on [0,1]: int dx . (del ^ f) = f(1) - f(0)",
       .manifold = "segment01",
       .field = "cubic1d",
       .lhs = {MeasureForm::Directed, Product::Inner},
       .term = DerivativeTerm::Curl,
       .rhs = {MeasureForm::Directed, Product::Geometric},
       .grade = 0,
       .anchor = scalar(1, 1.0)});
  add({.id = "C1",
       .title = "Green curl theorem: int dx2 . (del ^ F) = oint dx . F",
       .manifold = "unit_disk",
       .field = "rotor2d",
       .lhs = {MeasureForm::Directed, Product::Inner},
       .term = DerivativeTerm::Curl,
       .rhs = {MeasureForm::Directed, Product::Inner},
       .grade = 0,
       .anchor = scalar(2, -2.0 * kPi)});
  add({.id = "C2",
       .title = "2D divergence theorem: int dx2 ^ (del . F) = oint dx ^ F",
       .manifold = "unit_disk",
       .field = "radial2d",
       .lhs = {MeasureForm::Directed, Product::Outer},
       .term = DerivativeTerm::Divergence,
       .rhs = {MeasureForm::Directed, Product::Outer},
       .grade = 2,
       .anchor = blade(2, blade_of({1, 2}), 2.0 * kPi)});
  add({.id = "C3",
       .title = "bivector outer part: int dx3 . (del ^ B) = oint dx2 . B",
       .manifold = "unit_ball",
       .field = "radial_spin3d",
       .lhs = {MeasureForm::Directed, Product::Inner},
       .term = DerivativeTerm::Curl,
       .rhs = {MeasureForm::Directed, Product::Inner},
       .grade = 0,
       .anchor = scalar(3, -4.0 * kPi)});
  add({.id = "C4",
       .title = "bivector inner part: int dx3 . (del . B) = oint dx2 x B",
       .manifold = "unit_ball",
       .field = "linear_bivector",
       .lhs = {MeasureForm::Directed, Product::Inner},
       .term = DerivativeTerm::Divergence,
       .rhs = {MeasureForm::Directed, Product::Commutator},
       .grade = 2,
       // (4 pi / 3) e31
       .anchor = blade(3, blade_of({1, 3}), -4.0 * kPi / 3.0)});
  add({.id = "C5",
       .title = "ball in R^4 hyperplane: int dx3 ^ (d . B) = oint dx2 ^ B",
       .manifold = "unit_ball_r4",
       .field = "hyper_bivector",
       .lhs = {MeasureForm::Directed, Product::Outer},
       .term = DerivativeTerm::Divergence,
       .derivative = DerivativeKind::Tangential,
       .rhs = {MeasureForm::Directed, Product::Outer},
       .grade = 4,
       .anchor = blade(4, blade_of({1, 2, 3, 4}), 4.0 * kPi / 3.0)});
  add({.id = "C6",
       .title = "curl theorem variant: int (del x F) dV = -oint F x n dS",
       .manifold = "unit_ball",
       .field = "rotor3d",
       .lhs = {MeasureForm::Dual, Product::Geometric},
       .term = DerivativeTerm::CurlVector,
       .rhs = {MeasureForm::Dual, Product::Cross},
       .grade = 1,
       .anchor = blade(3, blade_of({3}), 8.0 * kPi / 3.0)});
  add({.id = "C7",
       .title = "divergence theorem: int (del . E) dV = oint E . n dS",
       .manifold = "unit_ball",
       .field = "radial3d",
       .lhs = {MeasureForm::Dual, Product::Geometric},
       .term = DerivativeTerm::Divergence,
       .rhs = {MeasureForm::Dual, Product::Inner},
       .grade = 0,
       .anchor = scalar(3, 4.0 * kPi)});
  add({.id = "C8",
       .title = "closed path: oint dx . grad phi = 0",
       .manifold = "unit_circle",
       .field = "cubic_potential2d",
       .lhs = {MeasureForm::Directed, Product::Inner},
       .term = DerivativeTerm::Full,
       .rhs = {MeasureForm::Directed, Product::Geometric},
       .grade = 0,
       .anchor = scalar(2, 0.0)});
  return cases;
}

Multivector cross(const Multivector& a, const Multivector& b) {
  if (a.algebra().dim() != 3) throw std::invalid_argument("cross product is defined in G3 only");
  return ga::geometric_product(ga::versor_inverse(ga::pseudoscalar(a.algebra())), ga::outer_product(a, b));
}

Multivector combine(Product p, const Multivector& measure, const Multivector& value) {
  switch (p) {
    case Product::Geometric:
      return geom::apply_pairing(geom::Pairing::Geometric, measure, value);
    case Product::Inner:
      return geom::apply_pairing(geom::Pairing::Inner, measure, value);
    case Product::Outer:
      return geom::apply_pairing(geom::Pairing::Outer, measure, value);
    case Product::Commutator:
      return geom::apply_pairing(geom::Pairing::Commutator, measure, value);
    case Product::Cross:
      return cross(measure, value);
  }
  return measure;
}

geom::Integrand side_integrand(const SideSpec& side, const FieldEvaluator& f, Algebra alg) {
  const Multivector dual_factor = ga::versor_inverse(ga::pseudoscalar(alg));
  return [side, f, dual_factor](const geom::DirectedMeasure& dm) {
    const Multivector measure =
        side.measure == MeasureForm::Dual ? ga::geometric_product(dual_factor, dm.mvector) : dm.mvector;
    return combine(side.product, measure, f(dm.x));
  };
}

FieldEvaluator volume_integrand_field(const CaseSpec& spec, const FieldEvaluator& f, const geom::Manifold& m) {
  if (spec.derivative == DerivativeKind::Tangential) {
    if (!m.tangent_blade()) throw std::invalid_argument(spec.id + ": tangential derivative needs a flat manifold");
    switch (spec.term) {
      case DerivativeTerm::Full:
        return calc::tangential_derivative_field(f, *m.tangent_blade(), DerivativePart::Full, spec.scheme);
      case DerivativeTerm::Divergence:
        return calc::tangential_derivative_field(f, *m.tangent_blade(), DerivativePart::Divergence, spec.scheme);
      case DerivativeTerm::Curl:
        return calc::tangential_derivative_field(f, *m.tangent_blade(), DerivativePart::Curl, spec.scheme);
      case DerivativeTerm::CurlVector:
        throw std::invalid_argument(spec.id + ": classical curl has no tangential form");
    }
  }
  switch (spec.term) {
    case DerivativeTerm::Full:
      return calc::derivative_field(f, DerivativePart::Full, spec.scheme);
    case DerivativeTerm::Divergence:
      return calc::derivative_field(f, DerivativePart::Divergence, spec.scheme);
    case DerivativeTerm::Curl:
      return calc::derivative_field(f, DerivativePart::Curl, spec.scheme);
    case DerivativeTerm::CurlVector:
      return calc::curl_vector_field(f, spec.scheme);
  }
  return f;
}

void check_grade(const CaseSpec& spec, const Multivector& side, const char* which) {
  if (spec.grade < 0 || spec.grade > side.algebra().dim()) {
    throw GradeMismatch(spec.id + ": declared grade outside the algebra");
  }
  const Multivector off = side - ga::grade_projection(side, spec.grade);
  if (off.norm() > 1e-9 * std::max(side.norm(), spec.scale_floor)) {
    throw GradeMismatch(spec.id + ": " + which + " side leaves grade " + std::to_string(spec.grade) + ": " +
                        ga::to_string(side));
  }
}

}  // namespace

const std::vector<CaseSpec>& case_catalog() {
  static const std::vector<CaseSpec> cases = build_catalog();
  return cases;
}

const CaseSpec& case_spec(std::string_view id) {
  for (const auto& c : case_catalog()) {
    if (c.id == id) return c;
  }
  throw UnknownId("case", std::string(id));
}

const FieldEvaluator& case_field(const CaseSpec& spec) {
  if (spec.field_override) return *spec.field_override;
  return calc::registered_field(spec.field);
}

double relative_error(const Multivector& a, const Multivector& b, double floor) {
  return (a - b).norm() / std::max({a.norm(), b.norm(), floor});
}

Multivector volume_side(const CaseSpec& spec, const geom::QuadratureRule& rule, int workers) {
  const geom::Manifold m = geom::named_manifold(spec.manifold);
  const FieldEvaluator& f = case_field(spec);
  if (!(f.algebra() == m.algebra())) throw std::invalid_argument(spec.id + ": field and manifold live in different spaces");
  const FieldEvaluator integrand = volume_integrand_field(spec, f, m);
  return geom::integrate(m, rule, side_integrand(spec.lhs, integrand, m.algebra()), workers);
}

Multivector boundary_side(const CaseSpec& spec, const geom::QuadratureRule& rule, int workers) {
  const geom::Manifold m = geom::named_manifold(spec.manifold);
  const FieldEvaluator& f = case_field(spec);
  if (!(f.algebra() == m.algebra())) throw std::invalid_argument(spec.id + ": field and manifold live in different spaces");
  const geom::Manifold rim = geom::boundary_of(m);
  const FieldEvaluator g = spec.perturbation != 0.0 ? calc::scaled_field(f, 1.0 + spec.perturbation) : f;
  return geom::integrate(rim, rule, side_integrand(spec.rhs, g, m.algebra()), workers);
}

CaseReport run_case(const CaseSpec& spec, const geom::QuadratureRule& rule, const RunOptions& options) {
  CaseReport r;
  r.id = spec.id;
  r.grade = spec.grade;
  r.order = rule.order;
  r.tolerance = options.tolerance;
  r.lhs = volume_side(spec, rule, options.workers);
  r.rhs = boundary_side(spec, rule, options.workers);
  check_grade(spec, r.lhs, "volume");
  check_grade(spec, r.rhs, "boundary");
  r.abs_err = (r.lhs - r.rhs).norm();
  r.rel_err = relative_error(r.lhs, r.rhs, spec.scale_floor);
  if (spec.anchor && !spec.field_override && spec.perturbation == 0.0) {
    r.anchor_err = (r.lhs - *spec.anchor).norm() / std::max(spec.anchor->norm(), spec.scale_floor);
  }
  if (options.convergence && rule.order >= 4) {
    const double scale = std::max({r.lhs.norm(), r.rhs.norm(), spec.scale_floor});
    // Finite-difference roundoff on the volume side bounds the attainable
    // agreement near 1e-10 relative; errors below 1e-9 count as converged.
    const auto study = convergence_study(spec, {rule.order / 4, rule.order / 2, rule.order}, 1e-9 * scale);
    r.slope = study.slope;
  }
  r.passed = r.rel_err <= options.tolerance && (!r.anchor_err || *r.anchor_err <= options.tolerance);
  return r;
}

std::vector<CaseReport> run_cases(const std::vector<CaseSpec>& specs, const geom::QuadratureRule& rule,
                                  const RunOptions& options) {
  std::vector<CaseReport> reports;
  if (options.workers <= 1) {
    for (const auto& s : specs) reports.push_back(run_case(s, rule, options));
    return reports;
  }
  RunOptions single = options;
  single.workers = 1;
  std::vector<std::future<CaseReport>> futures;
  for (const auto& s : specs) {
    futures.push_back(std::async(std::launch::async, [&s, &rule, single] { return run_case(s, rule, single); }));
  }
  for (auto& f : futures) reports.push_back(f.get());
  return reports;
}

geom::ConvergenceStudy convergence_study(const CaseSpec& spec, std::vector<int> orders, double floor) {
  return geom::convergence_study(
      [&spec](int order) {
        const geom::QuadratureRule rule{order};
        return (volume_side(spec, rule) - boundary_side(spec, rule)).norm();
      },
      std::move(orders), floor);
}

}  // namespace bcalc::verify
