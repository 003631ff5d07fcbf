// SPDX-License-Identifier: Apache-2.0

#include "bcalc/fields/field.hpp"

#include <algorithm>
#include <cmath>

namespace bcalc::calc {

Point::Point(int dim) : dim_(dim) {
  if (dim < 0 || dim > ga::kMaxDim) throw std::invalid_argument("Point: dimension must be in 0..6");
}

Point::Point(std::initializer_list<double> coords) : Point(static_cast<int>(coords.size())) {
  std::copy(coords.begin(), coords.end(), c_.begin());
}

double Point::norm() const {
  double s = 0.0;
  for (double v : coords()) s += v * v;
  return std::sqrt(s);
}

Point Point::embedded(int n) const {
  Point p(n);
  for (int i = 0; i < std::min(n, dim_); ++i) p[i] = c_[static_cast<std::size_t>(i)];
  return p;
}

Point& Point::operator+=(const Point& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("Point: dimension mismatch");
  for (int i = 0; i < dim_; ++i) c_[static_cast<std::size_t>(i)] += o[i];
  return *this;
}

Point& Point::operator-=(const Point& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("Point: dimension mismatch");
  for (int i = 0; i < dim_; ++i) c_[static_cast<std::size_t>(i)] -= o[i];
  return *this;
}

Point& Point::operator*=(double s) {
  for (int i = 0; i < dim_; ++i) c_[static_cast<std::size_t>(i)] *= s;
  return *this;
}

bool operator==(const Point& a, const Point& b) {
  if (a.dim_ != b.dim_) return false;
  return std::equal(a.coords().begin(), a.coords().end(), b.coords().begin());
}

Multivector to_vector(Algebra algebra, const Point& p) { return Multivector::vector(algebra, p.coords()); }

Point to_point(const Multivector& v) {
  Point p(v.algebra().dim());
  for (int i = 0; i < p.dim(); ++i) p[i] = v.coeff(1u << i);
  return p;
}

FieldEvaluator::FieldEvaluator(std::string name, Algebra algebra, std::vector<int> grades, Fn fn)
    : name_(std::move(name)), algebra_(algebra), grades_(std::move(grades)), fn_(std::move(fn)) {
  std::sort(grades_.begin(), grades_.end());
  grades_.erase(std::unique(grades_.begin(), grades_.end()), grades_.end());
  for (int g : grades_) {
    if (g < 0 || g > algebra_.dim()) throw std::invalid_argument("field " + name_ + ": grade out of range");
    grade_mask_ |= 1u << g;
  }
  if (!fn_) throw std::invalid_argument("field " + name_ + ": empty evaluator");
}

int FieldEvaluator::grade() const {
  if (!is_homogeneous()) throw std::invalid_argument("field " + name_ + " is not homogeneous");
  return grades_.front();
}

Multivector FieldEvaluator::operator()(const Point& x) const {
  Multivector v = fn_(x);
  if (!(v.algebra() == algebra_)) throw std::logic_error("field " + name_ + " returned a value in the wrong algebra");
  for (std::uint32_t i = 0; i < v.size(); ++i) {
    const double c = v.coeff(i);
    if (!std::isfinite(c)) throw NonFiniteValue("field " + name_ + " is not finite at the evaluation point");
    if (c != 0.0 && !(grade_mask_ & (1u << std::popcount(i)))) {
      throw std::logic_error("field " + name_ + " produced undeclared grade " + std::to_string(std::popcount(i)));
    }
  }
  return v;
}

FieldEvaluator dual_field(const FieldEvaluator& f, const Multivector& blade) {
  const Multivector inv = ga::versor_inverse(blade);
  const auto bg = blade.homogeneous_grade();
  if (!bg) throw std::invalid_argument("dual_field: blade must be homogeneous");
  const int n = f.algebra().dim();
  std::vector<int> grades;
  for (int k : f.grades()) {
    for (int g = std::abs(k - *bg); g <= std::min(k + *bg, 2 * n - k - *bg); g += 2) grades.push_back(g);
  }
  return FieldEvaluator("dual(" + f.name() + ")", f.algebra(), grades,
                        [f, inv](const Point& x) { return ga::geometric_product(f(x), inv); });
}

FieldEvaluator scaled_field(const FieldEvaluator& f, double s) {
  return FieldEvaluator(f.name(), f.algebra(), f.grades(), [f, s](const Point& x) { return f(x) * s; });
}

}  // namespace bcalc::calc
