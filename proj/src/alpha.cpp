#include "dgas/alpha.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

#include "dgas/errors.hpp"

namespace dgas {

std::string AlphaParam::to_string() const {
  if (num == 0) return "0";
  return std::to_string(num) + "/" + std::to_string(den);
}

AlphaParam make_alpha(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("alpha denominator must be nonzero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num < 0 || num >= den) throw DomainError("alpha must satisfy 0 <= alpha < 1");
  const std::int64_t g = std::gcd(num, den);
  AlphaParam p;
  p.num = num / g;
  p.den = den / g;
  p.c_alpha = p.den;
  p.a = p.num;
  p.b = p.den - p.num;
  return p;
}

AlphaParam parse_alpha(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
      throw DomainError("cannot parse alpha '" + std::string(text) + "' (expected p/q)");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return make_alpha(parse_int(text), 1);
  return make_alpha(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

BigIntMatrix build_ac(const Graph& g, const AlphaParam& alpha) {
  const std::size_t n = g.order();
  const auto d = degree_vector(g);
  BigIntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = BigInt(static_cast<long>(alpha.a * d[i]));
  for (auto [u, v] : g.edges()) {
    m(u, v) = static_cast<long>(alpha.b);
    m(v, u) = static_cast<long>(alpha.b);
  }
  return m;
}

namespace {

// Column k is A_c^k 1 / c for k >= 1 and the all-ones vector for k = 0.
std::vector<std::vector<BigInt>> scaled_walk_columns(const Graph& g, const AlphaParam& alpha,
                                                     std::size_t count) {
  const std::size_t n = g.order();
  const BigIntMatrix ac = build_ac(g, alpha);
  const auto deg = degree_vector(g);

  std::vector<BigInt> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = static_cast<long>(deg[i]);

  // Integrality rests on A_c 1 = c d.
  const std::vector<BigInt> ones(n, BigInt(1));
  const auto ac_ones = ac * ones;
  for (std::size_t i = 0; i < n; ++i)
    if (ac_ones[i] != alpha.c_alpha * d[i])
      throw std::logic_error("A_c 1 != c_alpha d; walk matrix would not be integral");

  std::vector<std::vector<BigInt>> cols;
  cols.reserve(count);
  if (count > 0) cols.push_back(ones);
  if (count > 1) cols.push_back(d);
  while (cols.size() < count) cols.push_back(ac * cols.back());
  return cols;
}

BigIntMatrix from_columns(std::size_t rows, const std::vector<std::vector<BigInt>>& cols) {
  BigIntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

}  // namespace

BigIntMatrix walk_matrix(const Graph& g, const AlphaParam& alpha) {
  return from_columns(g.order(), scaled_walk_columns(g, alpha, g.order()));
}

BigIntMatrix unscaled_walk_matrix(const Graph& g, const AlphaParam& alpha) {
  const std::size_t n = g.order();
  const BigIntMatrix ac = build_ac(g, alpha);
  std::vector<std::vector<BigInt>> cols;
  cols.push_back(std::vector<BigInt>(n, BigInt(1)));
  while (cols.size() < n) cols.push_back(ac * cols.back());
  return from_columns(n, cols);
}

HatWalkMatrices hat_walk_matrices(const Graph& g, const AlphaParam& alpha) {
  const std::size_t n = g.order();
  if (n < 2) throw DomainError("auxiliary walk matrices need n >= 2");
  auto cols = scaled_walk_columns(g, alpha, n);

  std::vector<std::vector<BigInt>> hat, hat_prime;
  if (n % 2 == 0) {
    for (std::size_t k = 0; k < n / 2; ++k) hat.push_back(cols[k]);
    hat_prime.push_back(cols[0]);
    for (std::size_t k = 2; k <= n - 2; k += 2) hat_prime.push_back(cols[k]);
  } else {
    for (std::size_t k = 1; k <= (n - 1) / 2; ++k) hat.push_back(cols[k]);
    for (std::size_t k = 2; k <= n - 1; k += 2) hat_prime.push_back(cols[k]);
  }
  HatWalkMatrices out;
  out.hat = from_columns(n, hat);
  out.hat_prime = from_columns(n, hat_prime);
  for (auto& x : cols[0]) x = 2;
  out.bar = from_columns(n, cols);
  return out;
}

std::vector<BigInt> walk_sums(const Graph& g, const AlphaParam& alpha, std::size_t max_power) {
  const std::size_t n = g.order();
  const BigIntMatrix ac = build_ac(g, alpha);
  std::vector<BigInt> v(n, BigInt(1));
  std::vector<BigInt> sums;
  sums.reserve(max_power + 1);
  for (std::size_t k = 0; k <= max_power; ++k) {
    if (k > 0) v = ac * v;
    BigInt s = 0;
    for (const auto& x : v) s += x;
    sums.push_back(s);
  }
  return sums;
}

SpectrumKey spectrum_key(const Graph& g, const AlphaParam& alpha) {
  return {charpoly(build_ac(g, alpha)), charpoly(build_ac(complement(g), alpha))};
}

}  // namespace dgas
