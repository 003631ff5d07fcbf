// SPDX-License-Identifier: Apache-2.0

#include "bcalc/fields/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace bcalc::calc {

int Monomial::degree() const {
  int d = 0;
  for (auto e : exponents) d += e;
  return d;
}

double Monomial::evaluate(const Point& x) const {
  double v = 1.0;
  for (int i = 0; i < ga::kMaxDim; ++i) {
    for (int k = 0; k < exponents[static_cast<std::size_t>(i)]; ++k) v *= x[i];
  }
  return v;
}

int Monomial::max_variable() const {
  for (int i = ga::kMaxDim; i > 0; --i) {
    if (exponents[static_cast<std::size_t>(i - 1)] != 0) return i;
  }
  return 0;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = 0; i < a.exponents.size(); ++i) {
    if (a.exponents[i] != b.exponents[i]) return b.exponents[i] <=> a.exponents[i];
  }
  return std::strong_ordering::equal;
}

MultivectorPolynomial::MultivectorPolynomial(Algebra algebra, std::vector<PolyTerm> terms)
    : algebra_(algebra), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    if (t.blade.bits >= algebra_.size()) {
      throw std::invalid_argument("blade " + ga::blade_name(t.blade) + " exceeds dimension " +
                                  std::to_string(algebra_.dim()));
    }
    if (t.monomial.max_variable() > algebra_.dim()) {
      throw std::invalid_argument("variable index exceeds dimension " + std::to_string(algebra_.dim()));
    }
  }
  canonicalize();
}

void MultivectorPolynomial::canonicalize() {
  std::stable_sort(terms_.begin(), terms_.end(), [](const PolyTerm& a, const PolyTerm& b) {
    if (a.blade != b.blade) return a.blade < b.blade;
    return a.monomial < b.monomial;
  });
  std::vector<PolyTerm> merged;
  for (const auto& t : terms_) {
    if (!merged.empty() && merged.back().blade == t.blade && merged.back().monomial == t.monomial) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const PolyTerm& t) { return t.coeff == 0.0; });
  terms_ = std::move(merged);
}

std::vector<int> MultivectorPolynomial::grades() const {
  std::vector<int> g;
  for (const auto& t : terms_) g.push_back(t.blade.grade());
  std::sort(g.begin(), g.end());
  g.erase(std::unique(g.begin(), g.end()), g.end());
  return g;
}

int MultivectorPolynomial::degree() const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
  return d;
}

double MultivectorPolynomial::coefficient_scale() const {
  double s = 0.0;
  for (const auto& t : terms_) s += std::abs(t.coeff);
  return s;
}

Multivector MultivectorPolynomial::evaluate(const Point& x) const {
  Multivector out(algebra_);
  for (const auto& t : terms_) out[t.blade] += t.coeff * t.monomial.evaluate(x);
  return out;
}

MultivectorPolynomial MultivectorPolynomial::partial(int axis) const {
  std::vector<PolyTerm> out;
  const auto a = static_cast<std::size_t>(axis);
  for (const auto& t : terms_) {
    const int e = t.monomial.exponents[a];
    if (e == 0) continue;
    PolyTerm d = t;
    d.coeff *= e;
    d.monomial.exponents[a] = static_cast<std::uint8_t>(e - 1);
    out.push_back(d);
  }
  return MultivectorPolynomial(algebra_, std::move(out));
}

MultivectorPolynomial MultivectorPolynomial::laplacian() const {
  MultivectorPolynomial sum(algebra_);
  for (int i = 0; i < algebra_.dim(); ++i) sum += partial(i).partial(i);
  return sum;
}

FieldEvaluator MultivectorPolynomial::to_field(std::string name) const {
  auto g = grades();
  if (g.empty()) g.push_back(0);
  return FieldEvaluator(std::move(name), algebra_, g, [p = *this](const Point& x) { return p.evaluate(x); });
}

MultivectorPolynomial& MultivectorPolynomial::operator+=(const MultivectorPolynomial& o) {
  if (!(o.algebra_ == algebra_)) throw std::invalid_argument("polynomial algebra mismatch");
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  canonicalize();
  return *this;
}

bool operator==(const MultivectorPolynomial& a, const MultivectorPolynomial& b) {
  return a.algebra_ == b.algebra_ && a.terms_ == b.terms_;
}

MultivectorPolynomial analytic_vector_derivative(const MultivectorPolynomial& p) {
  const Algebra alg = p.algebra();
  std::vector<PolyTerm> out;
  for (int i = 0; i < alg.dim(); ++i) {
    const ga::BladeIndex ei{1u << i};
    const MultivectorPolynomial d = p.partial(i);
    for (const auto& t : d.terms()) {
      const auto bp = ga::blade_product(ei, t.blade);
      out.push_back({bp.sign * t.coeff, t.monomial, bp.result});
    }
  }
  return MultivectorPolynomial(alg, std::move(out));
}

MultivectorPolynomial random_polynomial(std::mt19937_64& rng, Algebra algebra, int max_degree,
                                        const std::vector<int>& grades, int range, int max_terms) {
  std::vector<ga::BladeIndex> blades;
  for (std::uint32_t b = 0; b < algebra.size(); ++b) {
    if (std::find(grades.begin(), grades.end(), std::popcount(b)) != grades.end()) blades.push_back({b});
  }
  if (blades.empty()) throw std::invalid_argument("random_polynomial: no blades of the requested grades");
  std::uniform_int_distribution<int> coeff(-range, range);
  std::uniform_int_distribution<int> var(0, std::max(algebra.dim() - 1, 0));
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<std::size_t> pick(0, blades.size() - 1);
  std::uniform_int_distribution<int> nterms(1, max_terms);

  std::vector<PolyTerm> terms;
  const int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    PolyTerm t;
    t.coeff = coeff(rng);
    if (t.coeff == 0.0) t.coeff = 1.0;
    const int d = algebra.dim() == 0 ? 0 : deg(rng);
    for (int j = 0; j < d; ++j) ++t.monomial.exponents[static_cast<std::size_t>(var(rng))];
    t.blade = blades[pick(rng)];
    terms.push_back(t);
  }
  return MultivectorPolynomial(algebra, std::move(terms));
}

}  // namespace bcalc::calc
