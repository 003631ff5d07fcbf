// SPDX-License-Identifier: Apache-2.0

#include "bcalc/algebra/multivector.hpp"

#include <charconv>
#include <cmath>
#include <memory>
#include <mutex>

namespace bcalc::ga {

namespace {

struct CayleyTables {
  std::array<std::vector<std::int8_t>, kMaxDim + 1> signs;

  CayleyTables() {
    for (int n = 0; n <= kMaxDim; ++n) {
      const std::uint32_t size = 1u << n;
      auto& table = signs[n];
      table.resize(std::size_t{size} * size);
      for (std::uint32_t a = 0; a < size; ++a) {
        for (std::uint32_t b = 0; b < size; ++b) {
          table[a * size + b] = static_cast<std::int8_t>(blade_product({a}, {b}).sign);
        }
      }
    }
  }
};

const CayleyTables& tables() {
  static const CayleyTables t;
  return t;
}

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

// Shared kernel: accumulate a_i b_j over pairs accepted by keep(ga, gb, gr).
template <typename Keep>
Multivector product_if(const Multivector& a, const Multivector& b, Keep keep) {
  require_same_algebra(a, b);
  const Algebra alg = a.algebra();
  const auto n = static_cast<std::uint32_t>(alg.size());
  Multivector out(alg);
  for (std::uint32_t i = 0; i < n; ++i) {
    const double ai = a.coeff(i);
    if (ai == 0.0) continue;
    const int gi = std::popcount(i);
    for (std::uint32_t j = 0; j < n; ++j) {
      const double bj = b.coeff(j);
      if (bj == 0.0) continue;
      const std::uint32_t r = i ^ j;
      if (!keep(gi, std::popcount(j), std::popcount(r))) continue;
      out.coeff(r) += alg.sign(i, j) * ai * bj;
    }
  }
  return out;
}

void append_number(std::string& out, double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

}  // namespace

BladeIndex blade_of(std::initializer_list<int> indices) {
  BladeIndex b;
  int last = 0;
  for (int i : indices) {
    if (i <= last || i > kMaxDim) throw std::invalid_argument("blade_of: indices must ascend within 1..6");
    b.bits |= 1u << (i - 1);
    last = i;
  }
  return b;
}

std::string blade_name(BladeIndex b) {
  if (b.is_scalar()) return "1";
  std::string s = "e";
  for (int k = 0; k < kMaxDim; ++k) {
    if (b.bits & (1u << k)) s += static_cast<char>('1' + k);
  }
  return s;
}

Algebra::Algebra(int dim) : dim_(dim) {
  if (dim < 0 || dim > kMaxDim) throw std::invalid_argument("Algebra: dimension must be in 0..6");
  signs_ = tables().signs[dim].data();
}

std::size_t Algebra::grade_dimension(int k) const { return binomial(dim_, k); }

std::size_t Algebra::even_dimension() const {
  std::size_t total = 0;
  for (int k = 0; k <= dim_; k += 2) total += grade_dimension(k);
  return total;
}

Multivector Multivector::scalar(Algebra algebra, double value) {
  Multivector m(algebra);
  m.coeffs_[0] = value;
  return m;
}

Multivector Multivector::blade(Algebra algebra, BladeIndex b, double coeff) {
  if (b.bits >= algebra.size()) throw std::invalid_argument("blade " + blade_name(b) + " exceeds algebra dimension");
  Multivector m(algebra);
  m.coeffs_[b.bits] = coeff;
  return m;
}

Multivector Multivector::vector(Algebra algebra, std::span<const double> components) {
  if (components.size() > static_cast<std::size_t>(algebra.dim())) {
    throw std::invalid_argument("vector has more components than the algebra dimension");
  }
  Multivector m(algebra);
  for (std::size_t i = 0; i < components.size(); ++i) m.coeffs_[std::size_t{1} << i] = components[i];
  return m;
}

bool Multivector::is_zero() const {
  for (double c : coeffs()) {
    if (c != 0.0) return false;
  }
  return true;
}

std::vector<int> Multivector::grades() const {
  std::uint32_t mask = 0;
  for (std::uint32_t i = 0; i < size(); ++i) {
    if (coeffs_[i] != 0.0) mask |= 1u << std::popcount(i);
  }
  std::vector<int> out;
  for (int k = 0; k <= algebra_.dim(); ++k) {
    if (mask & (1u << k)) out.push_back(k);
  }
  return out;
}

std::optional<int> Multivector::homogeneous_grade() const {
  auto g = grades();
  if (g.size() != 1) return std::nullopt;
  return g.front();
}

double Multivector::norm() const {
  double s = 0.0;
  for (double c : coeffs()) s += c * c;
  return std::sqrt(s);
}

bool Multivector::all_finite() const {
  for (double c : coeffs()) {
    if (!std::isfinite(c)) return false;
  }
  return true;
}

Multivector& Multivector::operator+=(const Multivector& o) {
  require_same_algebra(*this, o);
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& o) {
  require_same_algebra(*this, o);
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] *= s;
  return *this;
}

Multivector& Multivector::operator/=(double s) {
  for (std::size_t i = 0; i < size(); ++i) coeffs_[i] /= s;
  return *this;
}

bool operator==(const Multivector& a, const Multivector& b) {
  if (!(a.algebra_ == b.algebra_)) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coeffs_[i] != b.coeffs_[i]) return false;
  }
  return true;
}

void require_same_algebra(const Multivector& a, const Multivector& b) {
  if (!(a.algebra() == b.algebra())) {
    throw std::invalid_argument("algebra mismatch: G" + std::to_string(a.algebra().dim()) + " vs G" +
                                std::to_string(b.algebra().dim()));
  }
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  return product_if(a, b, [](int, int, int) { return true; });
}

Multivector outer_product(const Multivector& a, const Multivector& b) {
  return product_if(a, b, [](int r, int s, int g) { return g == r + s; });
}

Multivector inner_product(const Multivector& a, const Multivector& b) {
  return product_if(a, b, [](int r, int s, int g) { return r > 0 && s > 0 && g == std::abs(r - s); });
}

Multivector left_contraction(const Multivector& a, const Multivector& b) {
  return product_if(a, b, [](int r, int s, int g) { return r <= s && g == s - r; });
}

Multivector commutator_product(const Multivector& a, const Multivector& b) {
  return (geometric_product(a, b) - geometric_product(b, a)) * 0.5;
}

double scalar_product(const Multivector& a, const Multivector& b) {
  require_same_algebra(a, b);
  const Algebra alg = a.algebra();
  double s = 0.0;
  // Only identical blades multiply to a scalar.
  for (std::uint32_t i = 0; i < alg.size(); ++i) s += alg.sign(i, i) * a.coeff(i) * b.coeff(i);
  return s;
}

Multivector grade_projection(const Multivector& a, int k) {
  if (k < 0 || k > a.algebra().dim()) {
    throw std::out_of_range("grade " + std::to_string(k) + " outside 0.." + std::to_string(a.algebra().dim()));
  }
  Multivector out(a.algebra());
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    if (std::popcount(i) == k) out.coeff(i) = a.coeff(i);
  }
  return out;
}

Multivector reverse(const Multivector& a) {
  Multivector out = a;
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    const int k = std::popcount(i);
    if ((k * (k - 1) / 2) % 2 == 1) out.coeff(i) = -a.coeff(i);
  }
  return out;
}

Multivector even_part(const Multivector& a) {
  Multivector out(a.algebra());
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    if (std::popcount(i) % 2 == 0) out.coeff(i) = a.coeff(i);
  }
  return out;
}

Multivector odd_part(const Multivector& a) { return a - even_part(a); }

Multivector pseudoscalar(Algebra algebra) {
  return Multivector::blade(algebra, BladeIndex{static_cast<std::uint32_t>(algebra.size() - 1)});
}

Multivector versor_inverse(const Multivector& a) {
  const Multivector rev = reverse(a);
  const Multivector norm2 = geometric_product(a, rev);
  const double s = norm2.scalar_part();
  // Rounding noise in the non-scalar part is tolerated relative to the scalar part.
  const double off = (norm2 - Multivector::scalar(a.algebra(), s)).norm();
  if (s == 0.0 || !std::isfinite(s) || off > 1e-12 * std::abs(s)) {
    throw std::domain_error("multivector is not invertible as a blade: " + to_string(a));
  }
  return rev / s;
}

Multivector dual(const Multivector& a) { return geometric_product(a, versor_inverse(pseudoscalar(a.algebra()))); }

Decomposition project_reject(const Multivector& a, const Multivector& blade) {
  const Multivector inv = versor_inverse(blade);
  Multivector proj = geometric_product(left_contraction(a, blade), inv);
  Multivector rej = a - proj;
  return {std::move(proj), std::move(rej)};
}

std::string to_string(const Multivector& a) {
  std::string out;
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    double c = a.coeff(i);
    if (c == 0.0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    c = std::abs(c);
    if (i == 0) {
      append_number(out, c);
    } else {
      if (c != 1.0) {
        append_number(out, c);
        out += ' ';
      }
      out += blade_name(BladeIndex{i});
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace bcalc::ga
