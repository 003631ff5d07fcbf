// SPDX-License-Identifier: Apache-2.0

#include "bcalc/verify/duality.hpp"

#include <algorithm>
#include <random>

#include "bcalc/fields/registry.hpp"

namespace bcalc::verify {

namespace {

using ga::Algebra;

struct Pairing {
  std::string partner;
  // Multiplies the case's field on the right to give the partner's field.
  Multivector field_factor;
  // Maps the case's result to the partner's: partner = factor_left * result * factor_right.
  Multivector result_left;
  Multivector result_right;
};

Pairing pairing_for(const std::string& id) {
  const Multivector i2 = ga::pseudoscalar(Algebra(2));
  const Multivector i3 = ga::pseudoscalar(Algebra(3));
  const Multivector one2 = Multivector::scalar(Algebra(2), 1.0);
  const Multivector one3 = Multivector::scalar(Algebra(3), 1.0);
  if (id == "C1") return {"C2", ga::versor_inverse(i2), one2, ga::versor_inverse(i2)};
  if (id == "C2") return {"C1", i2, one2, i2};
  if (id == "C3") return {"C7", ga::versor_inverse(i3), one3 * -1.0, one3};
  if (id == "C7") return {"C3", i3, ga::geometric_product(i3, i3), one3};
  throw std::invalid_argument("duality is defined for C1, C2, C3 and C7 only, not " + id);
}

Multivector mapped(const Pairing& p, const Multivector& m) {
  return ga::geometric_product(ga::geometric_product(p.result_left, m), p.result_right);
}

bool fields_identical(const FieldEvaluator& a, const FieldEvaluator& b) {
  std::mt19937_64 rng(0x5eed);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int k = 0; k < 100; ++k) {
    calc::Point x(a.domain_dim());
    for (int i = 0; i < x.dim(); ++i) x[i] = u(rng);
    if (!(a(x) == b(x))) return false;
  }
  return true;
}

}  // namespace

DualityVerdict dualize_case(const CaseSpec& spec, const CaseReport& report, const geom::QuadratureRule& rule) {
  const Pairing p = pairing_for(spec.id);
  DualityVerdict v;
  v.case_id = spec.id;
  v.partner_id = p.partner;

  CaseSpec partner = case_spec(p.partner);
  partner.field_override = calc::dual_field(case_field(spec), ga::versor_inverse(p.field_factor));
  partner.perturbation = spec.perturbation;
  v.field_identity = fields_identical(*partner.field_override, calc::registered_field(partner.field));

  const CaseSpec& registered = case_spec(p.partner);
  v.closed_form = spec.anchor && registered.anchor && mapped(p, *spec.anchor) == *registered.anchor;

  RunOptions options;
  options.convergence = false;
  v.partner = run_case(partner, rule, options);
  v.numeric_err = std::max(relative_error(mapped(p, report.lhs), v.partner.lhs, spec.scale_floor),
                           relative_error(mapped(p, report.rhs), v.partner.rhs, spec.scale_floor));
  v.passed = v.field_identity && v.closed_form && v.numeric_err <= v.tolerance;
  return v;
}

}  // namespace bcalc::verify
