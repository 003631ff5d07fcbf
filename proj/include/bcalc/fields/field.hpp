// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bcalc/algebra/multivector.hpp"

namespace bcalc::calc {

using ga::Algebra;
using ga::Multivector;

// Point in R^n, n <= 6, stored inline.
class Point {
 public:
  Point() = default;
  explicit Point(int dim);
  Point(std::initializer_list<double> coords);

  int dim() const { return dim_; }
  double operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  double& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  std::span<const double> coords() const { return {c_.data(), static_cast<std::size_t>(dim_)}; }

  double norm() const;
  // Same coordinates, padded with zeros (or truncated) to dimension n.
  Point embedded(int n) const;

  Point& operator+=(const Point& o);
  Point& operator-=(const Point& o);
  Point& operator*=(double s);
  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator*(Point a, double s) { return a *= s; }
  friend Point operator*(double s, Point a) { return a *= s; }
  friend bool operator==(const Point& a, const Point& b);

 private:
  std::array<double, ga::kMaxDim> c_{};
  int dim_ = 0;
};

Multivector to_vector(Algebra algebra, const Point& p);
// Grade-1 coefficients as a point of dimension algebra().dim().
Point to_point(const Multivector& v);

class NonFiniteValue : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pure, re-entrant mapping R^domain_dim -> G_n with a declared set of output
// grades. Evaluation through operator() validates both.
class FieldEvaluator {
 public:
  using Fn = std::function<Multivector(const Point&)>;

  FieldEvaluator(std::string name, Algebra algebra, std::vector<int> grades, Fn fn);

  const std::string& name() const { return name_; }
  Algebra algebra() const { return algebra_; }
  int domain_dim() const { return algebra_.dim(); }
  const std::vector<int>& grades() const { return grades_; }
  bool is_homogeneous() const { return grades_.size() == 1; }
  // Throws std::invalid_argument when the field is not homogeneous.
  int grade() const;

  // Throws NonFiniteValue for NaN/inf output and std::logic_error when the
  // result carries an undeclared grade.
  Multivector operator()(const Point& x) const;

 private:
  std::string name_;
  Algebra algebra_;
  std::vector<int> grades_;
  std::uint32_t grade_mask_ = 0;
  Fn fn_;
};

// G(x) = F(x) B^{-1} for an invertible blade B. With B = I_n this maps a
// grade-k field to its grade-(n-k) dual.
FieldEvaluator dual_field(const FieldEvaluator& f, const Multivector& blade);

// G(x) = s F(x).
FieldEvaluator scaled_field(const FieldEvaluator& f, double s);

}  // namespace bcalc::calc
