#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dgas/graph.hpp"
#include "dgas/linalg.hpp"

namespace dgas {

/// Rational alpha = num/den in lowest terms, 0 <= alpha < 1.
///
/// c_alpha is the reduced denominator, the least c making c*alpha and
/// c*(1 - alpha) integral; a = c*alpha and b = c*(1 - alpha).
struct AlphaParam {
  std::int64_t num = 0;
  std::int64_t den = 1;
  std::int64_t c_alpha = 1;
  std::int64_t a = 0;
  std::int64_t b = 1;

  std::string to_string() const;
  friend bool operator==(const AlphaParam&, const AlphaParam&) = default;
};

AlphaParam make_alpha(std::int64_t num, std::int64_t den);

/// Accepts "p/q", "p" (integer) or "0".
AlphaParam parse_alpha(std::string_view text);

/// A_c = a D + b A, the integral scaling of alpha D + (1 - alpha) A.
BigIntMatrix build_ac(const Graph& g, const AlphaParam& alpha);

/// W = [1, A_c 1, ..., A_c^{n-1} 1].
BigIntMatrix unscaled_walk_matrix(const Graph& g, const AlphaParam& alpha);

/// Modified walk matrix [1, A_c 1 / c, ..., A_c^{n-1} 1 / c]. Column k+1 is
/// built as A_c^{k-1} d, which equals A_c^k 1 / c because A_c 1 = c d.
BigIntMatrix walk_matrix(const Graph& g, const AlphaParam& alpha);

/// Auxiliary walk matrices for the rank-mod-2 structure checks.
///
///   hat       : even n: [1, A_c 1/c, ..., A_c^{n/2-1} 1/c]
///               odd n : [A_c 1/c, A_c^2 1/c, ..., A_c^{(n-1)/2} 1/c]
///   hat_prime : even n: [1, A_c^2 1/c, A_c^4 1/c, ..., A_c^{n-2} 1/c]
///               odd n : [A_c^2 1/c, A_c^4 1/c, ..., A_c^{n-1} 1/c]
///   bar       : [2*1, A_c 1/c, ..., A_c^{n-1} 1/c]
struct HatWalkMatrices {
  BigIntMatrix hat;
  BigIntMatrix hat_prime;
  BigIntMatrix bar;
};

HatWalkMatrices hat_walk_matrices(const Graph& g, const AlphaParam& alpha);

/// 1^T A_c^k 1 for k = 0..max_power.
std::vector<BigInt> walk_sums(const Graph& g, const AlphaParam& alpha, std::size_t max_power);

/// Characteristic polynomials of A_c(G) and A_c(complement of G). Two graphs
/// share the generalized A_alpha spectrum iff their keys are equal.
struct SpectrumKey {
  IntPolynomial graph;
  IntPolynomial complement;

  friend bool operator==(const SpectrumKey&, const SpectrumKey&) = default;
  friend bool operator<(const SpectrumKey& x, const SpectrumKey& y) {
    if (x.graph == y.graph) return x.complement < y.complement;
    return x.graph < y.graph;
  }
};

SpectrumKey spectrum_key(const Graph& g, const AlphaParam& alpha);

}  // namespace dgas
