// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "bcalc/algebra/multivector.hpp"

using namespace bcalc::ga;

namespace {

Multivector mv(int n, std::initializer_list<std::pair<std::initializer_list<int>, double>> terms) {
  Multivector m{Algebra(n)};
  for (const auto& [idx, c] : terms) m[idx.size() ? blade_of(idx) : BladeIndex{}] += c;
  return m;
}

}  // namespace

TEST_SUITE("algebra") {

TEST_CASE("blade product matches the transposition oracle for every pair up to n = 6") {
  for (int n = 0; n <= 6; ++n) {
    const Algebra alg(n);
    for (std::uint32_t a = 0; a < alg.size(); ++a) {
      for (std::uint32_t b = 0; b < alg.size(); ++b) {
        const auto want = oracle::blade_product(oracle::indices_of(a), oracle::indices_of(b));
        const BladeProduct got = blade_product(BladeIndex{a}, BladeIndex{b});
        REQUIRE(got.sign == want.sign);
        REQUIRE(got.result.bits == oracle::bits_of(want.indices));
        REQUIRE(alg.sign(a, b) == want.sign);
      }
    }
  }
}

TEST_CASE("blade product examples") {
  CHECK(blade_product(blade_of({1}), blade_of({1})).result.is_scalar());
  CHECK(blade_product(blade_of({1}), blade_of({1})).sign == 1);
  CHECK(blade_product(blade_of({1}), blade_of({2})).result == blade_of({1, 2}));
  CHECK(blade_product(blade_of({1}), blade_of({2})).sign == 1);
  CHECK(blade_product(blade_of({1, 3}), blade_of({2})).result == blade_of({1, 2, 3}));
  CHECK(blade_product(blade_of({1, 3}), blade_of({2})).sign == -1);
}

TEST_CASE("blade_of rejects unsorted or out-of-range indices") {
  CHECK_THROWS_AS(blade_of({2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(blade_of({7}), std::invalid_argument);
  CHECK(blade_name(blade_of({1, 3})) == "e13");
  CHECK(blade_name(BladeIndex{}) == "1");
}

TEST_CASE("geometric product examples") {
  CHECK(geometric_product(mv(3, {{{1}, 1}}), mv(3, {{{1}, 1}, {{2}, 1}})) == mv(3, {{{}, 1}, {{1, 2}, 1}}));
  CHECK(geometric_product(mv(3, {{{1, 2}, 1}}), mv(3, {{{1, 2}, 1}})) == mv(3, {{{}, -1}}));
  std::mt19937_64 rng(1);
  const Multivector a = oracle::random_integer_mv(rng, Algebra(4));
  CHECK(geometric_product(a, Multivector::scalar(Algebra(4), 1)) == a);
}

TEST_CASE("products agree with the oracle on random integer multivectors") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k < 50; ++k) {
      const Multivector a = oracle::random_integer_mv(rng, Algebra(n));
      const Multivector b = oracle::random_integer_mv(rng, Algebra(n));
      REQUIRE(geometric_product(a, b) == oracle::geometric(a, b));
      REQUIRE(outer_product(a, b) == oracle::wedge(a, b));
      REQUIRE(inner_product(a, b) == oracle::fat_dot(a, b));
      const Multivector ab = oracle::geometric(a, b), ba = oracle::geometric(b, a);
      REQUIRE(commutator_product(a, b) == (ab - ba) * 0.5);
    }
  }
}

TEST_CASE("outer product examples") {
  const Multivector e1 = mv(3, {{{1}, 1}}), e2 = mv(3, {{{2}, 1}}), e3 = mv(3, {{{3}, 1}});
  CHECK(outer_product(e1, e1).is_zero());
  CHECK(outer_product(outer_product(e1, e2), e3) == mv(3, {{{1, 2, 3}, 1}}));
  CHECK(outer_product(e1 + e2, e2) == mv(3, {{{1, 2}, 1}}));
  // Wedge with a scalar is scalar multiplication.
  CHECK(outer_product(mv(2, {{{1, 2}, 1}}), Multivector::scalar(Algebra(2), 3)) == mv(2, {{{1, 2}, 3}}));
}

TEST_CASE("inner product examples") {
  CHECK(inner_product(mv(3, {{{1}, 1}}), mv(3, {{{1}, 1}})) == mv(3, {{{}, 1}}));
  CHECK(inner_product(mv(3, {{{1}, 1}}), mv(3, {{{1, 2}, 1}})) == mv(3, {{{2}, 1}}));
  CHECK(inner_product(mv(3, {{{1, 2}, 1}}), mv(3, {{{1, 2}, 1}})) == mv(3, {{{}, -1}}));
  CHECK(inner_product(Multivector::scalar(Algebra(3), 2), mv(3, {{{1}, 1}})).is_zero());
}

TEST_CASE("left contraction differs from the fat dot only on scalar factors and reversed grades") {
  const Multivector s = Multivector::scalar(Algebra(3), 2);
  const Multivector e1 = mv(3, {{{1}, 1}});
  CHECK(left_contraction(s, e1) == e1 * 2.0);
  CHECK(left_contraction(mv(3, {{{1, 2}, 1}}), e1).is_zero());
  CHECK(left_contraction(e1, mv(3, {{{1, 2}, 1}})) == mv(3, {{{2}, 1}}));
}

TEST_CASE("commutator product examples") {
  CHECK(commutator_product(mv(3, {{{1, 2}, 1}}), mv(3, {{{2, 3}, 1}})) == mv(3, {{{1, 3}, 1}}));
  CHECK(commutator_product(mv(3, {{{1, 2}, 1}}), mv(3, {{{1, 2}, 1}})).is_zero());
  CHECK(commutator_product(mv(3, {{{1, 2}, 1}, {{2, 3}, 1}}), mv(3, {{{1, 3}, 1}})) ==
        mv(3, {{{1, 2}, 1}, {{2, 3}, -1}}));
}

TEST_CASE("grade bookkeeping") {
  const Multivector a = mv(3, {{{}, 1}, {{1}, 2}, {{1, 2}, 3}});
  CHECK(grade_projection(a, 1) == mv(3, {{{1}, 2}}));
  CHECK(grade_projection(mv(3, {{{1, 2, 3}, 1}}), 2).is_zero());
  CHECK_THROWS_AS(grade_projection(a, 4), std::out_of_range);
  CHECK_THROWS_AS(grade_projection(a, -1), std::out_of_range);
  std::mt19937_64 rng(3);
  const Multivector r = oracle::random_integer_mv(rng, Algebra(5));
  Multivector sum(Algebra(5));
  for (int k = 0; k <= 5; ++k) sum += grade_projection(r, k);
  CHECK(sum == r);
  CHECK(a.grades() == std::vector<int>{0, 1, 2});
  CHECK(!a.homogeneous_grade());
  CHECK(mv(3, {{{1, 3}, 2}}).homogeneous_grade() == 2);
}

TEST_CASE("grade of products of blades") {
  std::mt19937_64 rng(11);
  const Algebra alg(5);
  std::uniform_int_distribution<std::uint32_t> pick(0, 31);
  for (int k = 0; k < 500; ++k) {
    const Multivector a = Multivector::blade(alg, BladeIndex{pick(rng)}, 2);
    const Multivector b = Multivector::blade(alg, BladeIndex{pick(rng)}, -3);
    const int r = *a.homogeneous_grade(), s = *b.homogeneous_grade();
    const Multivector w = outer_product(a, b);
    if (!w.is_zero()) REQUIRE(w.homogeneous_grade() == r + s);
    const Multivector d = inner_product(a, b);
    if (!d.is_zero()) REQUIRE(d.homogeneous_grade() == std::abs(r - s));
    if (r == 2 && s == 2) {
      const Multivector c = commutator_product(a, b);
      if (!c.is_zero()) REQUIRE(c.homogeneous_grade() == 2);
    }
  }
}

TEST_CASE("reverse and even part") {
  CHECK(reverse(mv(3, {{{1, 2}, 1}})) == mv(3, {{{1, 2}, -1}}));
  CHECK(reverse(mv(3, {{{1, 2, 3}, 1}})) == mv(3, {{{1, 2, 3}, -1}}));
  CHECK(reverse(mv(3, {{{1}, 2}, {{3}, -1}})) == mv(3, {{{1}, 2}, {{3}, -1}}));
  CHECK(even_part(mv(3, {{{1}, 1}, {{1, 2}, 1}})) == mv(3, {{{1, 2}, 1}}));
  const std::vector<std::size_t> even = {1, 1, 2, 4, 8};
  for (int n = 0; n <= 4; ++n) {
    CHECK(Algebra(n).even_dimension() == even[static_cast<std::size_t>(n)]);
    for (int k = 0; k <= n; ++k) CHECK(static_cast<double>(Algebra(n).grade_dimension(k)) == oracle::binomial(n, k));
  }
}

TEST_CASE("pseudoscalar, dual and inverses") {
  CHECK(dual(mv(3, {{{1, 2}, 1}})) == mv(3, {{{3}, 1}}));
  const Multivector i3 = Multivector::blade(Algebra(4), blade_of({1, 2, 3}));
  CHECK(-geometric_product(i3, pseudoscalar(Algebra(4))) == mv(4, {{{4}, 1}}));
  std::mt19937_64 rng(5);
  for (int n = 1; n <= 6; ++n) {
    const Multivector i = pseudoscalar(Algebra(n));
    const Multivector i2 = oracle::geometric(i, i);
    const Multivector a = oracle::random_integer_mv(rng, Algebra(n));
    // I_n^2 = +-1, so dual(dual(A)) = A (I_n^2)^{-1} = A I_n^2.
    CHECK(dual(dual(a)) == a * i2.scalar_part());
    CHECK(geometric_product(versor_inverse(i), i) == Multivector::scalar(Algebra(n), 1));
  }
  CHECK(pseudoscalar(Algebra(2)) * pseudoscalar(Algebra(2)) == Multivector::scalar(Algebra(2), -1));
  CHECK(pseudoscalar(Algebra(4)) * pseudoscalar(Algebra(4)) == Multivector::scalar(Algebra(4), 1));
  CHECK_THROWS_AS(versor_inverse(Multivector(Algebra(3))), std::domain_error);
  CHECK_THROWS_AS(versor_inverse(mv(3, {{{}, 1}, {{1, 2}, 1}, {{3}, 1}})), std::domain_error);
}

TEST_CASE("projection and rejection") {
  const Multivector e12 = mv(3, {{{1, 2}, 1}});
  const auto d = project_reject(mv(3, {{{1}, 1}, {{3}, 1}}), e12);
  CHECK(d.projection == mv(3, {{{1}, 1}}));
  CHECK(d.rejection == mv(3, {{{3}, 1}}));
  std::mt19937_64 rng(9);
  for (int k = 0; k < 50; ++k) {
    const Multivector a = oracle::random_integer_mv(rng, Algebra(4));
    const Multivector blade = Multivector::blade(Algebra(4), blade_of({1, 3, 4}), 2);
    const auto pr = project_reject(a, blade);
    REQUIRE(pr.projection + pr.rejection == a);
    REQUIRE((project_reject(pr.projection, blade).projection - pr.projection).norm() <= 1e-12 * a.norm());
  }
  CHECK(project_reject(Multivector::scalar(Algebra(3), 5), e12).projection == Multivector::scalar(Algebra(3), 5));
  CHECK(project_reject(mv(3, {{{1, 2, 3}, 1}}), e12).projection.is_zero());
  CHECK_THROWS_AS(project_reject(e12, Multivector(Algebra(3))), std::domain_error);
}

TEST_CASE("mixed algebras are rejected") {
  CHECK_THROWS_AS(geometric_product(Multivector(Algebra(2)), Multivector(Algebra(3))), std::invalid_argument);
  CHECK_THROWS_AS(Multivector(Algebra(2)) + Multivector(Algebra(3)), std::invalid_argument);
  CHECK_THROWS(Algebra(7));
}

TEST_CASE("canonical text form") {
  CHECK(to_string(mv(3, {{{}, 1}, {{1}, 2}, {{1, 2}, -0.5}})) == "1 + 2 e1 - 0.5 e12");
  CHECK(to_string(Multivector(Algebra(3))) == "0");
  CHECK(to_string(mv(3, {{{1, 3}, -1}})) == "-e13");
}

}  // TEST_SUITE
