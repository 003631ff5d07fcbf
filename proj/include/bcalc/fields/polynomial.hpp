// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bcalc/fields/field.hpp"

namespace bcalc::calc {

// x1^a1 x2^a2 ... ; exponents indexed from 0.
struct Monomial {
  std::array<std::uint8_t, ga::kMaxDim> exponents{};

  int degree() const;
  double evaluate(const Point& x) const;
  // Highest variable index used, 0 for the constant monomial.
  int max_variable() const;

  // Graded order: lower degree first, then larger exponent of x1, x2, ...
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

struct PolyTerm {
  double coeff = 0.0;
  Monomial monomial;
  ga::BladeIndex blade;

  friend bool operator==(const PolyTerm& a, const PolyTerm& b) = default;
};

// Multivector-valued polynomial field in canonical form: terms sorted by blade,
// then monomial, like terms merged, zero terms dropped.
class MultivectorPolynomial {
 public:
  explicit MultivectorPolynomial(Algebra algebra) : algebra_(algebra) {}
  MultivectorPolynomial(Algebra algebra, std::vector<PolyTerm> terms);

  Algebra algebra() const { return algebra_; }
  const std::vector<PolyTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::vector<int> grades() const;
  int degree() const;
  // Sum of absolute coefficients; bounds |P| and its low derivatives on the unit ball.
  double coefficient_scale() const;

  Multivector evaluate(const Point& x) const;
  MultivectorPolynomial partial(int axis) const;
  // Sum of second partials, applied coefficientwise.
  MultivectorPolynomial laplacian() const;

  // At least one grade is always declared, so the zero polynomial is a scalar field.
  FieldEvaluator to_field(std::string name) const;

  MultivectorPolynomial& operator+=(const MultivectorPolynomial& o);
  friend bool operator==(const MultivectorPolynomial& a, const MultivectorPolynomial& b);

 private:
  void canonicalize();

  Algebra algebra_;
  std::vector<PolyTerm> terms_;
};

// Analytic vector derivative sum_i e_i d_i P, as a polynomial.
MultivectorPolynomial analytic_vector_derivative(const MultivectorPolynomial& p);

// Random polynomial with small-integer coefficients in [-range, range], total
// degree <= max_degree, blades drawn from the given grades.
MultivectorPolynomial random_polynomial(std::mt19937_64& rng, Algebra algebra, int max_degree,
                                        const std::vector<int>& grades, int range = 3, int max_terms = 8);

}  // namespace bcalc::calc
