// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bcalc/fields/derivative.hpp"
#include "bcalc/fields/field.hpp"
#include "bcalc/manifolds/quadrature.hpp"
#include "bcalc/unknown_id.hpp"

namespace bcalc::verify {

using calc::FieldEvaluator;
using ga::Multivector;

// Which element multiplies the integrand: the directed measure dx^m itself, or
// its ambient dual I_n^{-1} dx^m (the scalar dV or the vector n dS of classical
// calculus).
enum class MeasureForm { Directed, Dual };

enum class Product { Geometric, Inner, Outer, Commutator, Cross };

// Volume-side integrand: derivative part of the field.
enum class DerivativeTerm {
  Full,            // del F
  Divergence,      // del . F
  Curl,            // del ^ F
  CurlVector,      // classical del x F
};

enum class DerivativeKind { Full, Tangential };

struct SideSpec {
  MeasureForm measure = MeasureForm::Directed;
  Product product = Product::Geometric;
};

struct CaseSpec {
  std::string id;
  std::string title;
  std::string manifold;
  std::string field;
  SideSpec lhs;
  DerivativeTerm term = DerivativeTerm::Full;
  DerivativeKind derivative = DerivativeKind::Full;
  SideSpec rhs;
  int grade = 0;
  // Closed-form value of both sides for the registered field.
  std::optional<Multivector> anchor;
  // Replaces the registered field (parsed expressions, duality partners).
  std::optional<FieldEvaluator> field_override;
  // Test fixture: multiplies the boundary-side field by (1 + perturbation).
  double perturbation = 0.0;
  // Floor of the relative-error denominator.
  double scale_floor = 1.0;
  calc::DerivativeScheme scheme{};
};

struct CaseReport {
  std::string id;
  Multivector lhs{ga::Algebra(0)};
  Multivector rhs{ga::Algebra(0)};
  int grade = 0;
  double abs_err = 0.0;
  double rel_err = 0.0;
  int order = 0;
  // Observed log-log slope of |lhs - rhs| against quadrature order; nullopt when
  // the error sits at the floating-point floor.
  std::optional<double> slope;
  // |lhs - anchor| / max(|anchor|, floor) when the case has an anchor.
  std::optional<double> anchor_err;
  double tolerance = 1e-6;
  bool passed = false;
};

class GradeMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// C0..C8 in order.
const std::vector<CaseSpec>& case_catalog();
// Throws UnknownId.
const CaseSpec& case_spec(std::string_view id);

const FieldEvaluator& case_field(const CaseSpec& spec);

// |a - b| / max(|a|, |b|, floor)
double relative_error(const Multivector& a, const Multivector& b, double floor);

struct RunOptions {
  int workers = 1;
  bool convergence = true;
  double tolerance = 1e-6;
};

// Volume side: integral over M of measure (x) derivative-term(F).
Multivector volume_side(const CaseSpec& spec, const geom::QuadratureRule& rule, int workers = 1);
// Boundary side: integral over the boundary of M of measure (x) F; never
// differentiates.
Multivector boundary_side(const CaseSpec& spec, const geom::QuadratureRule& rule, int workers = 1);

// Throws GradeMismatch when either side leaves the declared grade.
CaseReport run_case(const CaseSpec& spec, const geom::QuadratureRule& rule, const RunOptions& options = {});
std::vector<CaseReport> run_cases(const std::vector<CaseSpec>& specs, const geom::QuadratureRule& rule,
                                  const RunOptions& options = {});

// |lhs - rhs| at each order.
geom::ConvergenceStudy convergence_study(const CaseSpec& spec, std::vector<int> orders, double floor = 1e-13);

}  // namespace bcalc::verify
