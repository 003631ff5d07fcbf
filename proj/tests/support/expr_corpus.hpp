// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace corpus {

// Random expression text exercising signs, '*', '^', decimal coefficients,
// repeated variables and non-canonical blades.
inline std::string random_expr_text(std::mt19937_64& rng, int dim) {
  std::uniform_int_distribution<int> nterms(1, 6), coef(-9, 9), var(1, dim), blade_len(0, std::min(dim, 3)),
      power(0, 3), nfactors(0, 3), style(0, 3);
  std::string s;
  const int n = nterms(rng);
  for (int t = 0; t < n; ++t) {
    const int c = coef(rng);
    if (t == 0) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    std::string term;
    if (style(rng) != 0 || c == 0) {
      term += std::to_string(std::abs(c));
      if (style(rng) == 1) term += ".25";
    }
    const int f = nfactors(rng);
    for (int k = 0; k < f; ++k) {
      if (!term.empty()) term += style(rng) == 2 ? "*" : " ";
      term += "x" + std::to_string(var(rng));
      const int p = power(rng);
      if (p > 1) term += "^" + std::to_string(p);
    }
    const int b = blade_len(rng);
    if (b > 0) {
      if (!term.empty()) term += " ";
      term += "e";
      std::vector<int> idx;
      for (int k = 1; k <= dim; ++k) idx.push_back(k);
      std::shuffle(idx.begin(), idx.end(), rng);
      for (int k = 0; k < b; ++k) term += std::to_string(idx[static_cast<std::size_t>(k)]);
    }
    if (term.empty()) term = "1";
    s += term;
  }
  return s;
}

}  // namespace corpus
