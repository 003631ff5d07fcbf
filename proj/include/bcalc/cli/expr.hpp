// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bcalc/fields/polynomial.hpp"

namespace bcalc::cli {

// Multivector polynomial in x1..xn written in the grammar
//   expr  := ['+'|'-'] term (('+'|'-') term)*
//   term  := [number] factor* [blade]       (at least one part present)
//   factor:= 'x' digit ['^' digits] ['*']
//   blade := 'e' digits                     (any order; e31 = -e13, e11 = 1)
// Numbers are decimal without exponent. E.g. "-x2 e1 + x1 e2", "0.5 x1^2 x3 e12".
struct FieldExpr {
  calc::MultivectorPolynomial poly{ga::Algebra(1)};

  int dim() const { return poly.algebra().dim(); }
  calc::FieldEvaluator compile(std::string name = "expr") const { return poly.to_field(std::move(name)); }
  friend bool operator==(const FieldExpr& a, const FieldExpr& b) { return a.poly == b.poly; }
};

class ExprError : public std::invalid_argument {
 public:
  ExprError(const std::string& what, std::size_t position)
      : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A variable or blade index beyond the ambient dimension.
class DimensionError : public ExprError {
 public:
  using ExprError::ExprError;
};

// ambient_dim 0 infers the smallest dimension covering every index (at least 1).
// Throws ExprError (syntax) or DimensionError.
FieldExpr parse_field_expr(std::string_view text, int ambient_dim = 0);

// Canonical form: terms in blade order then monomial order, like terms merged,
// coefficients in shortest round-trip notation. "0" for the empty sum.
std::string print_field_expr(const FieldExpr& e);

}  // namespace bcalc::cli
