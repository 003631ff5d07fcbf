// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "bcalc/fields/field.hpp"

namespace bcalc::calc {

// Second-order central differences. The step used at x is step * max(1, |x|).
struct DerivativeScheme {
  double step = 1e-5;

  double step_at(const Point& x) const;

  // Larger step for derivatives of derivatives, where roundoff scales as 1/h^2.
  static DerivativeScheme nested() { return DerivativeScheme{1e-4}; }
};

// d_i F at x.
Multivector partial_derivative(const FieldEvaluator& f, const Point& x, int axis, const DerivativeScheme& scheme = {});

// sum_i e_i d_i F.
Multivector vector_derivative(const FieldEvaluator& f, const Point& x, const DerivativeScheme& scheme = {});

struct DerivativeSplit {
  Multivector div;   // grade k-1
  Multivector curl;  // grade k+1
};

// For a homogeneous grade-k field; throws std::invalid_argument otherwise.
DerivativeSplit derivative_split(const FieldEvaluator& f, const Point& x, const DerivativeScheme& scheme = {});

// I_m^{-1} ((I_m . del) F): the contraction I_m . e_i is taken with the operator
// before the outer I_m^{-1} multiplication. Equals the vector derivative when
// I_m is the full pseudoscalar.
Multivector tangential_derivative(const FieldEvaluator& f, const Point& x, const Multivector& tangent_blade,
                                  const DerivativeScheme& scheme = {});

enum class DerivativePart { Full, Divergence, Curl };

// Fields of derivatives, usable as integrands. For Divergence and Curl the
// source must be homogeneous; the result is the grade k-1 (k+1) part.
FieldEvaluator derivative_field(const FieldEvaluator& f, DerivativePart part, DerivativeScheme scheme = {});
FieldEvaluator tangential_derivative_field(const FieldEvaluator& f, const Multivector& tangent_blade,
                                           DerivativePart part, DerivativeScheme scheme = {});

// Classical vector calculus on R^2 / R^3. Each throws std::invalid_argument for a
// field of the wrong grade.
Multivector gradient(const FieldEvaluator& phi, const Point& x, const DerivativeScheme& scheme = {});
double divergence(const FieldEvaluator& f, const Point& x, const DerivativeScheme& scheme = {});
// I_n^{-1} (del ^ F): a vector in R^3, a scalar in R^2.
Multivector curl(const FieldEvaluator& f, const Point& x, const DerivativeScheme& scheme = {});
// del . (del phi) by composing central differences.
double laplacian(const FieldEvaluator& phi, const Point& x, const DerivativeScheme& scheme = DerivativeScheme::nested());

FieldEvaluator gradient_field(const FieldEvaluator& phi, DerivativeScheme scheme = {});
FieldEvaluator curl_vector_field(const FieldEvaluator& f, DerivativeScheme scheme = {});
FieldEvaluator divergence_field(const FieldEvaluator& f, DerivativeScheme scheme = {});

}  // namespace bcalc::calc
