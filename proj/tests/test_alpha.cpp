#include <gtest/gtest.h>

#include "dgas/alpha.hpp"
#include "dgas/errors.hpp"
#include "oracles.hpp"

using namespace dgas;

namespace {

BigIntMatrix from_rows(std::vector<std::vector<long>> rows) {
  BigIntMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

std::vector<BigInt> ints(std::vector<long> xs) {
  std::vector<BigInt> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

Graph path(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.set_edge(i, i + 1);
  return g;
}

const std::vector<AlphaParam>& alpha_grid() {
  static const std::vector<AlphaParam> grid{make_alpha(0, 1), make_alpha(1, 2), make_alpha(1, 3),
                                            make_alpha(2, 3), make_alpha(3, 4), make_alpha(5, 6)};
  return grid;
}

}  // namespace

TEST(Alpha, MakeAndParse) {
  EXPECT_EQ(make_alpha(0, 1).c_alpha, 1);
  EXPECT_EQ(make_alpha(1, 2).c_alpha, 2);
  const auto a = make_alpha(10, 11);
  EXPECT_EQ(a.c_alpha, 11);
  EXPECT_EQ(a.a, 10);
  EXPECT_EQ(a.b, 1);
  EXPECT_EQ(make_alpha(2, 4), make_alpha(1, 2));
  EXPECT_EQ(make_alpha(-1, -2), make_alpha(1, 2));
  EXPECT_EQ(make_alpha(0, 7), make_alpha(0, 1));
  EXPECT_THROW(make_alpha(1, 0), DomainError);
  EXPECT_THROW(make_alpha(1, 1), DomainError);
  EXPECT_THROW(make_alpha(3, 2), DomainError);
  EXPECT_THROW(make_alpha(-1, 2), DomainError);

  EXPECT_EQ(parse_alpha("3/4"), make_alpha(3, 4));
  EXPECT_EQ(parse_alpha("0"), make_alpha(0, 1));
  EXPECT_EQ(parse_alpha("6/8").to_string(), "3/4");
  for (const char* bad : {"1", "a/b", "1/0", "", "1/", "/2", "1/2x", "0.5"})
    EXPECT_THROW(parse_alpha(bad), DomainError) << bad;
}

TEST(Alpha, InvariantsOfReducedForm) {
  for (long den = 1; den <= 30; ++den)
    for (long num = 0; num < den; ++num) {
      const auto a = make_alpha(num, den);
      EXPECT_GE(a.c_alpha, 1);
      EXPECT_EQ(a.a + a.b, a.c_alpha);
      EXPECT_GE(a.a, 0);
      EXPECT_GE(a.b, 1);
      EXPECT_EQ(a.a * den, num * a.c_alpha);
    }
}

TEST(BuildAc, Examples) {
  EXPECT_EQ(build_ac(path(3), make_alpha(1, 2)), from_rows({{1, 1, 0}, {1, 2, 1}, {0, 1, 1}}));
  EXPECT_EQ(build_ac(path(3), make_alpha(3, 4)), from_rows({{3, 1, 0}, {1, 6, 1}, {0, 1, 3}}));
  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) {
    const Graph g = oracle::random_graph(rng, 1 + rng() % 8);
    const auto ac = build_ac(g, make_alpha(0, 1));
    for (std::size_t i = 0; i < g.order(); ++i)
      for (std::size_t j = 0; j < g.order(); ++j) EXPECT_EQ(ac(i, j), g.adjacent(i, j) ? 1 : 0);
  }
}

TEST(BuildAc, ComplementIdentity) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 10;
    const Graph g = oracle::random_graph(rng, n);
    const auto& alpha = alpha_grid()[rng() % alpha_grid().size()];
    BigIntMatrix expected(n, n, BigInt(alpha.b));
    for (std::size_t i = 0; i < n; ++i) expected(i, i) += alpha.a * static_cast<long>(n - 1) - alpha.b;
    EXPECT_EQ(build_ac(complement(g), alpha), expected - build_ac(g, alpha));
  }
}

TEST(WalkMatrix, Examples) {
  const Graph k1(1);
  for (const auto& alpha : alpha_grid()) EXPECT_EQ(walk_matrix(k1, alpha), from_rows({{1}}));

  const auto w = walk_matrix(path(3), make_alpha(0, 1));
  EXPECT_EQ(w, from_rows({{1, 1, 2}, {1, 2, 2}, {1, 1, 2}}));
  EXPECT_EQ(det_bareiss(w), 0);

  const Graph k3 = complement(Graph(3));
  for (const auto& alpha : alpha_grid()) {
    const auto m = walk_matrix(k3, alpha);
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(m(0, j), m(1, j));
      EXPECT_EQ(m(1, j), m(2, j));
    }
    EXPECT_EQ(det_bareiss(m), 0);
  }
}

// The columns are A_c^k 1 / c, checked against direct powering and division.
TEST(WalkMatrix, ScalingRelation) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 9;
    const Graph g = oracle::random_graph(rng, n);
    const auto& alpha = alpha_grid()[rng() % alpha_grid().size()];
    const auto w = walk_matrix(g, alpha);
    const auto unscaled = unscaled_walk_matrix(g, alpha);
    BigIntMatrix scale(n, n);
    scale(0, 0) = 1;
    for (std::size_t k = 1; k < n; ++k) scale(k, k) = alpha.c_alpha;
    EXPECT_EQ(w * scale, unscaled);
    BigInt ck;
    mpz_ui_pow_ui(ck.get_mpz_t(), alpha.c_alpha, n - 1);
    EXPECT_EQ(det_bareiss(unscaled), ck * det_bareiss(w));
  }
}

TEST(HatWalk, Shapes) {
  std::mt19937_64 rng(4);
  for (std::size_t n = 2; n <= 9; ++n) {
    const Graph g = oracle::random_graph(rng, n);
    const auto alpha = make_alpha(1, 2);
    const auto hats = hat_walk_matrices(g, alpha);
    const auto w = walk_matrix(g, alpha);
    EXPECT_EQ(hats.hat.cols(), n / 2);
    EXPECT_EQ(hats.hat_prime.cols(), n / 2);
    EXPECT_EQ(hats.bar.cols(), n);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(hats.bar(i, 0), 2);
      for (std::size_t j = 1; j < n; ++j) EXPECT_EQ(hats.bar(i, j), w(i, j));
    }
    // Even n starts with the all-ones column, odd n with A_c 1 / c.
    const std::size_t first = n % 2 == 0 ? 0 : 1;
    for (std::size_t k = 0; k < hats.hat.cols(); ++k)
      for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(hats.hat(i, k), w(i, first + k));
    for (std::size_t k = 0; k < hats.hat_prime.cols(); ++k) {
      const std::size_t col = n % 2 == 0 ? 2 * k : 2 * k + 2;
      for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(hats.hat_prime(i, k), w(i, col));
    }
  }
  EXPECT_THROW(hat_walk_matrices(Graph(1), make_alpha(0, 1)), DomainError);
}

TEST(HatWalk, PathOnFourVertices) {
  const auto hats = hat_walk_matrices(path(4), make_alpha(0, 1));
  EXPECT_EQ(hats.hat, from_rows({{1, 1}, {1, 2}, {1, 2}, {1, 1}}));
}

TEST(SpectrumKey, Examples) {
  const auto k1 = spectrum_key(Graph(1), make_alpha(1, 2));
  EXPECT_EQ(k1.graph.coeffs, ints({0, 1}));
  EXPECT_EQ(k1.complement.coeffs, ints({0, 1}));

  const auto k2 = spectrum_key(complement(Graph(2)), make_alpha(0, 1));
  EXPECT_EQ(k2.graph.coeffs, ints({-1, 0, 1}));
  EXPECT_EQ(k2.complement.coeffs, ints({0, 0, 1}));

  const auto k3 = spectrum_key(complement(Graph(3)), make_alpha(0, 1));
  EXPECT_EQ(k3.graph.to_string(), "x^3 - 3x - 2");
  EXPECT_EQ(k3.complement.coeffs, ints({0, 0, 0, 1}));
}

TEST(SpectrumKey, ComplementDuality) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    const Graph g = oracle::random_graph(rng, 1 + rng() % 8);
    const auto& alpha = alpha_grid()[rng() % alpha_grid().size()];
    const auto key = spectrum_key(g, alpha);
    const auto swapped = spectrum_key(complement(g), alpha);
    EXPECT_EQ(key.graph, swapped.complement);
    EXPECT_EQ(key.complement, swapped.graph);
  }
}

TEST(SpectrumKey, PermutationInvariant) {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 2 + rng() % 7;
    const Graph g = oracle::random_graph(rng, n);
    const auto& alpha = alpha_grid()[rng() % alpha_grid().size()];
    EXPECT_EQ(spectrum_key(g, alpha), spectrum_key(g.permuted(oracle::random_permutation(rng, n)), alpha));
  }
}

TEST(WalkSums, SmallCases) {
  // P3 at alpha = 1/2: A_c = Q(P3), 1^T Q 1 = 2 * 2|E| = 8.
  const auto sums = walk_sums(path(3), make_alpha(1, 2), 2);
  EXPECT_EQ(sums[0], 3);
  EXPECT_EQ(sums[1], 8);
  EXPECT_EQ(sums[2], 24);  // Q 1 = (2, 4, 2), |Q 1|^2 = 24
}
