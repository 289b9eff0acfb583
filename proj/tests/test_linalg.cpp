#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "skewfq/linalg.hpp"

using namespace skewfq;

namespace {

FpMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, std::uint32_t p) {
  FpMatrix m(r, c, p);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<std::uint32_t>(rng() % p);
  }
  return m;
}

// All x in F_p^n with m x = 0, by enumeration.
std::size_t kernel_size_by_enumeration(const FpMatrix& m) {
  const std::uint32_t p = m.modulus();
  std::size_t total = 1;
  for (std::size_t i = 0; i < m.cols(); ++i) total *= p;
  std::size_t count = 0;
  for (std::size_t idx = 0; idx < total; ++idx) {
    FpVector v(m.cols());
    std::size_t rest = idx;
    for (auto& x : v) {
      x = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    const auto img = m.apply(v);
    if (std::all_of(img.begin(), img.end(), [](std::uint32_t y) { return y == 0; })) ++count;
  }
  return count;
}

}  // namespace

TEST(ModArith, InverseAndPower) {
  for (std::uint32_t p : {2U, 3U, 5U, 7U, 31U}) {
    for (std::uint32_t x = 1; x < p; ++x) EXPECT_EQ(std::uint64_t{x} * mod_inverse(x, p) % p, 1U);
  }
  EXPECT_EQ(mod_pow(3, 4, 7), 81U % 7);
  EXPECT_EQ(mod_pow(5, 0, 7), 1U);
}

TEST(Kernel, MatchesEnumeration) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t p = trial % 2 == 0 ? 2 : 3;
    const FpMatrix m = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 5, p);
    const auto basis = kernel_basis(m);
    std::size_t expected = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) expected *= p;
    EXPECT_EQ(kernel_size_by_enumeration(m), expected);
    for (const auto& v : basis) {
      const auto img = m.apply(v);
      EXPECT_TRUE(std::all_of(img.begin(), img.end(), [](std::uint32_t y) { return y == 0; }));
    }
    EXPECT_EQ(rank(m) + basis.size(), m.cols());
  }
}

TEST(Solve, FindsSolutionsExactlyWhenConsistent) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint32_t p = 5;
    const FpMatrix m = random_matrix(rng, 3, 3, p);
    FpVector x(3);
    for (auto& v : x) v = static_cast<std::uint32_t>(rng() % p);
    const auto b = m.apply(x);
    const auto sol = solve(m, b);
    ASSERT_TRUE(sol.has_value());
    EXPECT_EQ(m.apply(*sol), b);
  }
  FpMatrix zero(2, 2, 3);
  const FpVector b{1, 0};
  EXPECT_FALSE(solve(zero, b).has_value());
}

TEST(Subspace, SumAndIntersectionDimensions) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const std::uint32_t p = 3;
    std::vector<FpVector> a;
    std::vector<FpVector> b;
    for (int i = 0; i < 2; ++i) {
      FpVector v(4);
      FpVector w(4);
      for (auto& x : v) x = static_cast<std::uint32_t>(rng() % p);
      for (auto& x : w) x = static_cast<std::uint32_t>(rng() % p);
      a.push_back(v);
      b.push_back(w);
    }
    const auto sa = Subspace::span(p, 4, a);
    const auto sb = Subspace::span(p, 4, b);
    EXPECT_EQ((sa + sb).dim() + sa.intersect(sb).dim(), sa.dim() + sb.dim());
    EXPECT_TRUE((sa + sb).contains(sa));
    EXPECT_TRUE(sa.contains(sa.intersect(sb)));
    EXPECT_EQ(sa.elements().size(), static_cast<std::size_t>(std::pow(p, sa.dim())));
  }
}

TEST(Subspace, CanonicalRepresentation) {
  const auto s1 = Subspace::span(2, 3, {{1, 1, 0}, {0, 1, 1}});
  const auto s2 = Subspace::span(2, 3, {{1, 0, 1}, {1, 1, 0}});
  EXPECT_EQ(s1, s2);
}
