// SPDX-License-Identifier: Apache-2.0

#include "bcalc/fields/derivative.hpp"

#include <algorithm>
#include <cmath>

namespace bcalc::calc {

namespace {

void require_grade(const FieldEvaluator& f, int grade, const char* op) {
  if (!f.is_homogeneous() || f.grade() != grade) {
    throw std::invalid_argument(std::string(op) + ": field " + f.name() + " must be of grade " + std::to_string(grade));
  }
}

void require_classical_dim(const FieldEvaluator& f, const char* op) {
  const int n = f.algebra().dim();
  if (n != 2 && n != 3) throw std::invalid_argument(std::string(op) + ": defined on R^2 and R^3 only");
}

std::vector<int> neighbour_grades(const std::vector<int>& grades, int n, DerivativePart part) {
  std::vector<int> out;
  for (int k : grades) {
    if (part != DerivativePart::Curl && k >= 1) out.push_back(k - 1);
    if (part != DerivativePart::Divergence && k + 1 <= n) out.push_back(k + 1);
  }
  // A scalar's divergence (or a pseudoscalar's curl) vanishes identically.
  if (out.empty()) out.push_back(0);
  return out;
}

Multivector select_part(const Multivector& full, int k, DerivativePart part) {
  const int n = full.algebra().dim();
  switch (part) {
    case DerivativePart::Full:
      return full;
    case DerivativePart::Divergence:
      return k >= 1 ? ga::grade_projection(full, k - 1) : Multivector(full.algebra());
    case DerivativePart::Curl:
      return k + 1 <= n ? ga::grade_projection(full, k + 1) : Multivector(full.algebra());
  }
  return full;
}

const char* part_name(DerivativePart part) {
  switch (part) {
    case DerivativePart::Full:
      return "del";
    case DerivativePart::Divergence:
      return "div";
    case DerivativePart::Curl:
      return "curl";
  }
  return "del";
}

}  // namespace

double DerivativeScheme::step_at(const Point& x) const {
  if (!(step > 0.0)) throw std::invalid_argument("DerivativeScheme: step must be positive");
  return step * std::max(1.0, x.norm());
}

Multivector partial_derivative(const FieldEvaluator& f, const Point& x, int axis, const DerivativeScheme& scheme) {
  if (x.dim() != f.domain_dim()) throw std::invalid_argument("partial_derivative: point dimension mismatch");
  const double h = scheme.step_at(x);
  Point xp = x;
  Point xm = x;
  xp[axis] += h;
  xm[axis] -= h;
  return (f(xp) - f(xm)) / (2.0 * h);
}

Multivector vector_derivative(const FieldEvaluator& f, const Point& x, const DerivativeScheme& scheme) {
  const Algebra alg = f.algebra();
  Multivector out(alg);
  for (int i = 0; i < alg.dim(); ++i) {
    const auto ei = Multivector::blade(alg, ga::BladeIndex{1u << i});
    out += ga::geometric_product(ei, partial_derivative(f, x, i, scheme));
  }
  return out;
}

DerivativeSplit derivative_split(const FieldEvaluator& f, const Point& x, const DerivativeScheme& scheme) {
  const int k = f.grade();
  const Multivector full = vector_derivative(f, x, scheme);
  return {select_part(full, k, DerivativePart::Divergence), select_part(full, k, DerivativePart::Curl)};
}

Multivector tangential_derivative(const FieldEvaluator& f, const Point& x, const Multivector& tangent_blade,
                                  const DerivativeScheme& scheme) {
  ga::require_same_algebra(tangent_blade, Multivector(f.algebra()));
  const Algebra alg = f.algebra();
  const Multivector inv = ga::versor_inverse(tangent_blade);
  Multivector sum(alg);
  for (int i = 0; i < alg.dim(); ++i) {
    const auto ei = Multivector::blade(alg, ga::BladeIndex{1u << i});
    const Multivector contracted = ga::inner_product(tangent_blade, ei);
    if (contracted.is_zero()) continue;
    sum += ga::geometric_product(contracted, partial_derivative(f, x, i, scheme));
  }
  return ga::geometric_product(inv, sum);
}

FieldEvaluator derivative_field(const FieldEvaluator& f, DerivativePart part, DerivativeScheme scheme) {
  const int k = part == DerivativePart::Full ? -1 : f.grade();
  auto grades = neighbour_grades(f.grades(), f.algebra().dim(), part);
  return FieldEvaluator(std::string(part_name(part)) + "(" + f.name() + ")", f.algebra(), std::move(grades),
                        [f, part, k, scheme](const Point& x) { return select_part(vector_derivative(f, x, scheme), k, part); });
}

FieldEvaluator tangential_derivative_field(const FieldEvaluator& f, const Multivector& tangent_blade,
                                           DerivativePart part, DerivativeScheme scheme) {
  const int k = part == DerivativePart::Full ? -1 : f.grade();
  ga::versor_inverse(tangent_blade);  // validates invertibility up front
  auto grades = neighbour_grades(f.grades(), f.algebra().dim(), part);
  return FieldEvaluator(std::string("tangential_") + part_name(part) + "(" + f.name() + ")", f.algebra(),
                        std::move(grades), [f, tangent_blade, part, k, scheme](const Point& x) {
                          return select_part(tangential_derivative(f, x, tangent_blade, scheme), k, part);
                        });
}

Multivector gradient(const FieldEvaluator& phi, const Point& x, const DerivativeScheme& scheme) {
  require_grade(phi, 0, "gradient");
  return vector_derivative(phi, x, scheme);
}

double divergence(const FieldEvaluator& f, const Point& x, const DerivativeScheme& scheme) {
  require_grade(f, 1, "divergence");
  return vector_derivative(f, x, scheme).scalar_part();
}

Multivector curl(const FieldEvaluator& f, const Point& x, const DerivativeScheme& scheme) {
  require_grade(f, 1, "curl");
  require_classical_dim(f, "curl");
  const Multivector wedge = ga::grade_projection(vector_derivative(f, x, scheme), 2);
  return ga::geometric_product(ga::versor_inverse(ga::pseudoscalar(f.algebra())), wedge);
}

double laplacian(const FieldEvaluator& phi, const Point& x, const DerivativeScheme& scheme) {
  require_grade(phi, 0, "laplacian");
  // Central difference of a central difference with step h collapses to a
  // second difference with step 2h.
  const double h = scheme.step_at(x);
  const double centre = phi(x).scalar_part();
  double sum = 0.0;
  for (int i = 0; i < x.dim(); ++i) {
    Point xp = x;
    Point xm = x;
    xp[i] += 2.0 * h;
    xm[i] -= 2.0 * h;
    sum += (phi(xp).scalar_part() - 2.0 * centre + phi(xm).scalar_part()) / (4.0 * h * h);
  }
  return sum;
}

FieldEvaluator gradient_field(const FieldEvaluator& phi, DerivativeScheme scheme) {
  require_grade(phi, 0, "gradient");
  return FieldEvaluator("grad(" + phi.name() + ")", phi.algebra(), {1},
                        [phi, scheme](const Point& x) { return vector_derivative(phi, x, scheme); });
}

FieldEvaluator curl_vector_field(const FieldEvaluator& f, DerivativeScheme scheme) {
  require_grade(f, 1, "curl");
  require_classical_dim(f, "curl");
  const int out_grade = f.algebra().dim() == 3 ? 1 : 0;
  return FieldEvaluator("curlvec(" + f.name() + ")", f.algebra(), {out_grade},
                        [f, scheme](const Point& x) { return curl(f, x, scheme); });
}

FieldEvaluator divergence_field(const FieldEvaluator& f, DerivativeScheme scheme) {
  require_grade(f, 1, "divergence");
  return FieldEvaluator("divergence(" + f.name() + ")", f.algebra(), {0}, [f, scheme](const Point& x) {
    return Multivector::scalar(f.algebra(), divergence(f, x, scheme));
  });
}

}  // namespace bcalc::calc
