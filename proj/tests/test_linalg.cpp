#include <gtest/gtest.h>

#include "dgas/errors.hpp"
#include "dgas/linalg.hpp"
#include "oracles.hpp"

using namespace dgas;

namespace {

BigIntMatrix from_rows(std::vector<std::vector<long>> rows) {
  BigIntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

std::vector<BigInt> ints(std::vector<long> xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

BigIntMatrix random_nonsingular(std::mt19937_64& rng, std::size_t n) {
  while (true) {
    auto m = oracle::random_matrix(rng, n, n, -9, 9);
    if (det_bareiss(m) != 0) return m;
  }
}

}  // namespace

TEST(Determinant, Examples) {
  EXPECT_EQ(det_bareiss(BigIntMatrix::identity(3)), 1);
  EXPECT_EQ(det_bareiss(from_rows({{0, 1}, {1, 0}})), -1);
  EXPECT_EQ(det_bareiss(from_rows({{1, 2}, {2, 4}})), 0);
  EXPECT_EQ(det_bareiss(from_rows({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}})), -1);
  EXPECT_THROW(det_bareiss(BigIntMatrix(2, 3)), DimensionError);
}

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 5;
    // Small ranges make singular and zero-pivot cases common.
    const long span = t % 2 == 0 ? 2 : 50;
    const auto m = oracle::random_matrix(rng, n, n, -span, span);
    EXPECT_EQ(det_bareiss(m), oracle::cofactor_det(oracle::rows_of(m)));
  }
}

TEST(Charpoly, Examples) {
  EXPECT_EQ(charpoly(from_rows({{5}})).coeffs, ints({-5, 1}));
  EXPECT_EQ(charpoly(from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})).coeffs, ints({-2, -3, 0, 1}));
  EXPECT_EQ(charpoly(BigIntMatrix(2, 2)).coeffs, ints({0, 0, 1}));
  EXPECT_EQ(charpoly(from_rows({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})).to_string(), "x^3 - 3x - 2");
}

TEST(Charpoly, MatchesInterpolatedDeterminants) {
  std::mt19937_64 rng(103);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 6;
    const auto m = oracle::random_matrix(rng, n, n, -6, 6);
    EXPECT_EQ(charpoly(m).coeffs, oracle::charpoly_interpolated(oracle::rows_of(m)));
  }
}

TEST(Charpoly, ConstantTermIsSignedDeterminant) {
  std::mt19937_64 rng(107);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 8;
    const auto m = oracle::random_matrix(rng, n, n, -20, 20);
    const BigInt det = det_bareiss(m);
    EXPECT_EQ(charpoly(m).evaluate(0), n % 2 == 0 ? det : BigInt(-det));
  }
}

TEST(RankModP, Examples) {
  for (long p : {2, 3, 7, 101}) EXPECT_EQ(rank_mod_p(BigIntMatrix::identity(4), p), 4u);
  EXPECT_EQ(rank_mod_p(BigIntMatrix(3, 3, BigInt(1)), 2), 1u);
  EXPECT_EQ(rank_mod_p(from_rows({{2, 4}, {6, 8}}), 2), 0u);
  EXPECT_EQ(rank_mod_p(from_rows({{-1, 2}, {1, -2}}), 5), 1u);
  EXPECT_THROW(rank_mod_p(BigIntMatrix::identity(2), 4), DomainError);
  EXPECT_THROW(rank_mod_p(BigIntMatrix::identity(2), 1), DomainError);
}

TEST(RankModP, MatchesFermatElimination) {
  std::mt19937_64 rng(109);
  const std::vector<long> primes{2, 3, 5, 7, 11, 13};
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    const long p = primes[rng() % primes.size()];
    const auto m = oracle::random_matrix(rng, rows, cols, -30, 30);
    const auto r = rank_mod_p(m, p);
    EXPECT_EQ(r, oracle::rank_mod_p(oracle::rows_of(m), p));
    EXPECT_LE(r, std::min(rows, cols));
  }
}

TEST(RankModP, InvariantUnderPermutation) {
  std::mt19937_64 rng(113);
  for (int t = 0; t < 50; ++t) {
    auto m = oracle::random_matrix(rng, 6, 6, 0, 2);
    const auto r = rank_mod_p(m, 3);
    m.swap_rows(0, 1 + rng() % 5);
    m.swap_cols(0, 1 + rng() % 5);
    EXPECT_EQ(rank_mod_p(m, 3), r);
  }
}

TEST(Smith, Examples) {
  EXPECT_EQ(smith_normal_form(from_rows({{0, 1}, {1, 0}})).divisors, ints({1, 1}));
  EXPECT_EQ(smith_normal_form(from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})).divisors,
            ints({2, 6, 12}));
  EXPECT_EQ(smith_normal_form(BigIntMatrix(2, 2)).divisors, ints({0, 0}));
  EXPECT_EQ(smith_normal_form(from_rows({{6}})).divisors, ints({6}));
  EXPECT_EQ(smith_normal_form(from_rows({{-6}})).divisors, ints({6}));
  EXPECT_EQ(smith_normal_form(from_rows({{2, 0}, {0, 3}})).divisors, ints({1, 6}));
}

TEST(Smith, RecompositionDivisibilityAndDeterminant) {
  std::mt19937_64 rng(127);
  for (int t = 0; t < 200; ++t) {
    const auto m = oracle::random_matrix(rng, 4, 4, t % 3 == 0 ? -2 : -40, t % 3 == 0 ? 2 : 40);
    const auto snf = smith_normal_form(m);
    ASSERT_EQ(snf.recompose(), m);
    EXPECT_EQ(abs(det_bareiss(snf.v1)), 1);
    EXPECT_EQ(abs(det_bareiss(snf.v2)), 1);
    BigInt prod = 1;
    for (std::size_t i = 0; i < snf.divisors.size(); ++i) {
      EXPECT_GE(snf.divisors[i], 0);
      prod *= snf.divisors[i];
      if (i + 1 < snf.divisors.size() && snf.divisors[i] != 0)
        EXPECT_TRUE(mpz_divisible_p(snf.divisors[i + 1].get_mpz_t(), snf.divisors[i].get_mpz_t()));
      if (snf.divisors[i] == 0 && i + 1 < snf.divisors.size()) EXPECT_EQ(snf.divisors[i + 1], 0);
    }
    EXPECT_EQ(prod, abs(det_bareiss(m)));
  }
}

TEST(Smith, RectangularRecomposes) {
  std::mt19937_64 rng(131);
  for (int t = 0; t < 50; ++t) {
    const auto m = oracle::random_matrix(rng, 2 + rng() % 4, 2 + rng() % 4, -9, 9);
    const auto snf = smith_normal_form(m);
    EXPECT_EQ(snf.recompose(), m);
    EXPECT_EQ(snf.divisors.size(), std::min(m.rows(), m.cols()));
  }
}

TEST(Congruence, Examples) {
  EXPECT_FALSE(congruence_solvable(BigIntMatrix::identity(3), 2));
  EXPECT_TRUE(congruence_solvable(from_rows({{4, 0}, {0, 1}}), 2));
  EXPECT_FALSE(congruence_solvable(from_rows({{2, 0}, {0, 1}}), 2));
  EXPECT_TRUE(congruence_solvable(BigIntMatrix(2, 2), 3));
}

TEST(Congruence, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(137);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 3;
    const long p = t % 2 == 0 ? 2 : 3;
    const auto m = oracle::random_matrix(rng, n, n, -10, 10);
    EXPECT_EQ(congruence_solvable(m, p), oracle::congruence_exhaustive(oracle::rows_of(m), p))
        << "t=" << t;
  }
}

TEST(RationalInverse, Examples) {
  EXPECT_EQ(rational_inverse(BigIntMatrix::identity(3)), RationalMatrix::identity(3));
  RationalMatrix expected(2, 2);
  expected(0, 0) = Rational(1, 2);
  expected(1, 1) = Rational(1, 4);
  EXPECT_EQ(rational_inverse(from_rows({{2, 0}, {0, 4}})), expected);
  EXPECT_THROW(rational_inverse(from_rows({{1, 2}, {2, 4}})), SingularMatrixError);
}

TEST(RationalInverse, ProductIsIdentity) {
  std::mt19937_64 rng(139);
  for (int t = 0; t < 100; ++t) {
    const auto m = random_nonsingular(rng, 5);
    const auto inv = rational_inverse(m);
    EXPECT_EQ(to_rational(m) * inv, RationalMatrix::identity(5));
    EXPECT_EQ(inv * to_rational(m), RationalMatrix::identity(5));
  }
}
