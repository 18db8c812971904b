#include <gtest/gtest.h>

#include <random>

#include "cactus/errors.hpp"
#include "cactus/rational_matrix.hpp"
#include "oracles.hpp"

using namespace cactus;

namespace {

RationalMatrix from_ints(std::size_t n, std::initializer_list<std::int64_t> values) {
  std::vector<Rational> entries;
  for (auto v : values) entries.emplace_back(v);
  return RationalMatrix(n, entries.size() / n, entries);
}

RationalMatrix random_matrix(std::size_t n, std::mt19937_64& rng, bool fractional) {
  std::uniform_int_distribution<std::int64_t> dist(-6, 6);
  std::uniform_int_distribution<std::int64_t> den(1, 4);
  RationalMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = fractional ? Rational(dist(rng), den(rng)) : Rational(dist(rng));
  }
  return m;
}

}  // namespace

TEST(Determinant, SmallExamples) {
  EXPECT_EQ(determinant_exact(from_ints(1, {5})), Rational(5));
  EXPECT_EQ(determinant_exact(RationalMatrix::identity(3)), Rational(1));
  EXPECT_EQ(determinant_exact(RationalMatrix(0, 0)), Rational(1));
  EXPECT_EQ(determinant_exact(from_ints(2, {0, 1, 1, 0})), Rational(-1));
  // Grounded Laplacian of C4.
  EXPECT_EQ(determinant_exact(from_ints(3, {2, -1, 0, -1, 2, -1, 0, -1, 2})), Rational(4));
}

TEST(Determinant, NonSquareRejected) {
  EXPECT_THROW(determinant_exact(RationalMatrix(2, 3)), DimensionError);
}

TEST(DeterminantProperty, MatchesCofactorExpansion) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const RationalMatrix m = random_matrix(n, rng, trial % 2 == 1);
    EXPECT_EQ(determinant_exact(m), oracle::cofactor_determinant(m));
  }
}

TEST(DeterminantProperty, SingularWhenRowsRepeat) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 50; ++trial) {
    RationalMatrix m = random_matrix(4, rng, true);
    for (std::size_t c = 0; c < 4; ++c) m(3, c) = m(0, c) * Rational(3, 2);
    EXPECT_TRUE(determinant_exact(m).is_zero());
  }
}

TEST(Solve, Examples) {
  const std::vector<Rational> b{Rational(3), Rational(5)};
  EXPECT_EQ(solve_exact(from_ints(2, {2, 1, 1, 3}), b), (std::vector<Rational>{Rational(4, 5), Rational(7, 5)}));
  const std::vector<Rational> one{Rational(1), Rational(0), Rational(0)};
  const auto x = solve_exact(from_ints(3, {2, -1, 0, -1, 2, -1, 0, -1, 2}), one);
  EXPECT_EQ(x, (std::vector<Rational>{Rational(3, 4), Rational(1, 2), Rational(1, 4)}));
}

TEST(Solve, Errors) {
  const std::vector<Rational> b{Rational(1), Rational(1)};
  EXPECT_THROW(solve_exact(from_ints(2, {1, 2, 2, 4}), b), SingularMatrix);
  EXPECT_THROW(solve_exact(RationalMatrix(2, 3), b), DimensionError);
  const std::vector<Rational> wrong{Rational(1)};
  EXPECT_THROW(solve_exact(RationalMatrix::identity(2), wrong), DimensionError);
}

TEST(SolveProperty, SolutionReproducesRightHandSide) {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::int64_t> dist(-9, 9);
  int solved = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const RationalMatrix m = random_matrix(n, rng, trial % 3 == 0);
    std::vector<Rational> b;
    for (std::size_t i = 0; i < n; ++i) b.emplace_back(dist(rng), 1 + trial % 4);
    if (oracle::cofactor_determinant(m).is_zero()) {
      EXPECT_THROW(solve_exact(m, b), SingularMatrix);
      continue;
    }
    ++solved;
    EXPECT_EQ(m.multiply(solve_exact(m, b)), b);
  }
  EXPECT_GT(solved, 150);
}

TEST(Inverse, TimesOriginalIsIdentity) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 40; ++trial) {
    const RationalMatrix m = random_matrix(1 + trial % 5, rng, true);
    if (oracle::cofactor_determinant(m).is_zero()) continue;
    const RationalMatrix inv = inverse_exact(m);
    const std::size_t n = m.rows();
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        Rational s;
        for (std::size_t k = 0; k < n; ++k) s += m(r, k) * inv(k, c);
        EXPECT_EQ(s, Rational(r == c ? 1 : 0));
      }
    }
  }
}

TEST(Matrix, WithoutDropsRowsAndColumns) {
  const RationalMatrix m = from_ints(3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
  const std::size_t drop[] = {1};
  EXPECT_EQ(m.without(drop), from_ints(2, {1, 3, 7, 9}));
}
