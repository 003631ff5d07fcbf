// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcalc::ga {

inline constexpr int kMaxDim = 6;
inline constexpr std::size_t kMaxBlades = std::size_t{1} << kMaxDim;

// A basis blade e_{i1 i2 ...} stored as a bit mask; bit k set means e_{k+1}
// appears in the (ascending) index list. The empty mask is the scalar blade.
struct BladeIndex {
  std::uint32_t bits = 0;

  constexpr int grade() const { return std::popcount(bits); }
  constexpr bool is_scalar() const { return bits == 0; }

  friend constexpr bool operator==(BladeIndex, BladeIndex) = default;
  friend constexpr auto operator<=>(BladeIndex, BladeIndex) = default;
};

// Builds a blade from ascending 1-based indices, e.g. blade_of({1, 3}) == e13.
BladeIndex blade_of(std::initializer_list<int> indices);

// "e13", "1" for the scalar blade.
std::string blade_name(BladeIndex b);

struct BladeProduct {
  int sign = 1;
  BladeIndex result;
};

// Product of two basis blades under the Euclidean metric.
constexpr BladeProduct blade_product(BladeIndex a, BladeIndex b) {
  // Count transpositions needed to move every index of b past the larger
  // indices of a; repeated indices then square to +1.
  int swaps = 0;
  for (std::uint32_t x = a.bits >> 1; x != 0; x >>= 1) swaps += std::popcount(x & b.bits);
  return {(swaps & 1) ? -1 : 1, BladeIndex{a.bits ^ b.bits}};
}

// Euclidean geometric algebra G_n, 0 <= n <= 6. Cheap value handle onto a
// process-wide Cayley table built on first use.
class Algebra {
 public:
  explicit Algebra(int dim);

  int dim() const { return dim_; }
  std::size_t size() const { return std::size_t{1} << dim_; }
  int sign(std::uint32_t a, std::uint32_t b) const { return signs_[a * size() + b]; }

  // Number of blades of grade k: binomial(dim, k).
  std::size_t grade_dimension(int k) const;
  std::size_t even_dimension() const;

  friend bool operator==(const Algebra& a, const Algebra& b) { return a.dim_ == b.dim_; }

 private:
  int dim_;
  const std::int8_t* signs_;
};

class Multivector {
 public:
  explicit Multivector(Algebra algebra) : algebra_(algebra) {}

  static Multivector scalar(Algebra algebra, double value);
  static Multivector blade(Algebra algebra, BladeIndex b, double coeff = 1.0);
  // Grade-1 element from components v[0] e1 + v[1] e2 + ...
  static Multivector vector(Algebra algebra, std::span<const double> components);

  Algebra algebra() const { return algebra_; }
  std::size_t size() const { return algebra_.size(); }

  double operator[](BladeIndex b) const { return coeffs_[b.bits]; }
  double& operator[](BladeIndex b) { return coeffs_[b.bits]; }
  double coeff(std::uint32_t bits) const { return coeffs_[bits]; }
  double& coeff(std::uint32_t bits) { return coeffs_[bits]; }
  std::span<const double> coeffs() const { return {coeffs_.data(), size()}; }

  double scalar_part() const { return coeffs_[0]; }
  bool is_zero() const;
  // Grades carrying a nonzero coefficient, ascending.
  std::vector<int> grades() const;
  // The single grade if homogeneous, nullopt for zero or mixed multivectors.
  std::optional<int> homogeneous_grade() const;
  // Euclidean coefficient norm sqrt(sum c_i^2).
  double norm() const;
  bool all_finite() const;

  Multivector& operator+=(const Multivector& o);
  Multivector& operator-=(const Multivector& o);
  Multivector& operator*=(double s);
  Multivector& operator/=(double s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator-(Multivector a) { return a *= -1.0; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }
  friend Multivector operator/(Multivector a, double s) { return a /= s; }
  friend bool operator==(const Multivector& a, const Multivector& b);

 private:
  Algebra algebra_;
  std::array<double, kMaxBlades> coeffs_{};
};

// Throws std::invalid_argument when the operands live in different algebras.
void require_same_algebra(const Multivector& a, const Multivector& b);

Multivector geometric_product(const Multivector& a, const Multivector& b);
Multivector outer_product(const Multivector& a, const Multivector& b);
// Symmetric "fat dot": grade |r - s| part of the product of the grade-r and
// grade-s parts. Any term with a scalar factor contributes nothing.
Multivector inner_product(const Multivector& a, const Multivector& b);
// Left contraction a _| b: grade s - r part for r <= s, zero otherwise.
Multivector left_contraction(const Multivector& a, const Multivector& b);
Multivector commutator_product(const Multivector& a, const Multivector& b);
// <a b>_0
double scalar_product(const Multivector& a, const Multivector& b);

inline Multivector operator*(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b);
}
inline Multivector operator^(const Multivector& a, const Multivector& b) {
  return outer_product(a, b);
}

// Throws std::out_of_range unless 0 <= k <= dim.
Multivector grade_projection(const Multivector& a, int k);
Multivector reverse(const Multivector& a);
Multivector even_part(const Multivector& a);
Multivector odd_part(const Multivector& a);

// I_n = e1 ^ ... ^ en.
Multivector pseudoscalar(Algebra algebra);
// reverse(A) / <A reverse(A)>_0. Throws std::domain_error if A reverse(A) is
// not a nonzero scalar (A is not a blade or versor).
Multivector versor_inverse(const Multivector& a);
// A I_n^{-1}.
Multivector dual(const Multivector& a);

struct Decomposition {
  Multivector projection;
  Multivector rejection;
};

// Projection (A _| I) I^{-1} onto the subspace of blade I and its complement.
// Throws std::domain_error when I is not invertible.
Decomposition project_reject(const Multivector& a, const Multivector& blade);

// Canonical text form "1 + 2 e1 - 0.5 e12"; "0" for zero.
std::string to_string(const Multivector& a);

}  // namespace bcalc::ga
