// SPDX-License-Identifier: Apache-2.0
//
// Reference implementations that share no code with the library: blade
// products from explicit index lists, and multivector products built on them.

#pragma once

#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "bcalc/algebra/multivector.hpp"

namespace oracle {

using Indices = std::vector<int>;

struct BladeResult {
  int sign = 1;
  Indices indices;
};

// Concatenate, bubble-sort counting swaps, then cancel equal neighbours (e_i^2 = +1).
inline BladeResult blade_product(const Indices& a, const Indices& b) {
  Indices s = a;
  s.insert(s.end(), b.begin(), b.end());
  int swaps = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j + 1 < s.size() - i; ++j) {
      if (s[j] > s[j + 1]) {
        std::swap(s[j], s[j + 1]);
        ++swaps;
      }
    }
  }
  Indices out;
  for (std::size_t i = 0; i < s.size();) {
    if (i + 1 < s.size() && s[i] == s[i + 1]) {
      i += 2;
    } else {
      out.push_back(s[i++]);
    }
  }
  return {swaps % 2 ? -1 : 1, out};
}

inline Indices indices_of(std::uint32_t bits) {
  Indices v;
  for (int i = 0; i < 32; ++i) {
    if (bits & (1u << i)) v.push_back(i + 1);
  }
  return v;
}

inline std::uint32_t bits_of(const Indices& v) {
  std::uint32_t b = 0;
  for (int i : v) b |= 1u << (i - 1);
  return b;
}

using Sparse = std::map<Indices, double>;

inline Sparse sparse(const bcalc::ga::Multivector& m) {
  Sparse s;
  for (std::uint32_t i = 0; i < m.size(); ++i) {
    if (m.coeff(i) != 0.0) s[indices_of(i)] = m.coeff(i);
  }
  return s;
}

inline bcalc::ga::Multivector dense(const Sparse& s, bcalc::ga::Algebra alg) {
  bcalc::ga::Multivector m(alg);
  for (const auto& [k, v] : s) m.coeff(bits_of(k)) += v;
  return m;
}

inline bcalc::ga::Multivector geometric(const bcalc::ga::Multivector& a, const bcalc::ga::Multivector& b) {
  Sparse out;
  for (const auto& [ka, va] : sparse(a)) {
    for (const auto& [kb, vb] : sparse(b)) {
      const BladeResult r = blade_product(ka, kb);
      out[r.indices] += r.sign * va * vb;
    }
  }
  return dense(out, a.algebra());
}

// Grade-selected product of homogeneous parts: select(r, s) picks the kept grade
// (or -1 for none).
template <class Select>
bcalc::ga::Multivector graded(const bcalc::ga::Multivector& a, const bcalc::ga::Multivector& b, Select select) {
  Sparse out;
  for (const auto& [ka, va] : sparse(a)) {
    for (const auto& [kb, vb] : sparse(b)) {
      const BladeResult r = blade_product(ka, kb);
      const int keep = select(static_cast<int>(ka.size()), static_cast<int>(kb.size()));
      if (keep >= 0 && static_cast<int>(r.indices.size()) == keep) out[r.indices] += r.sign * va * vb;
    }
  }
  return dense(out, a.algebra());
}

inline bcalc::ga::Multivector wedge(const bcalc::ga::Multivector& a, const bcalc::ga::Multivector& b) {
  return graded(a, b, [](int r, int s) { return r + s; });
}

inline bcalc::ga::Multivector fat_dot(const bcalc::ga::Multivector& a, const bcalc::ga::Multivector& b) {
  return graded(a, b, [](int r, int s) { return r == 0 || s == 0 ? -1 : std::abs(r - s); });
}

inline bcalc::ga::Multivector random_integer_mv(std::mt19937_64& rng, bcalc::ga::Algebra alg, int range = 4) {
  std::uniform_int_distribution<int> d(-range, range);
  bcalc::ga::Multivector m(alg);
  for (std::uint32_t i = 0; i < alg.size(); ++i) m.coeff(i) = d(rng);
  return m;
}

inline double binomial(int n, int k) {
  // Pascal's rule.
  std::vector<std::vector<double>> c(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) {
    c[i].assign(static_cast<std::size_t>(i + 1), 1.0);
    for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c[n][k];
}

}  // namespace oracle
