#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dgas/alpha.hpp"
#include "dgas/number_theory.hpp"

namespace dgas {

/// Closed verdict taxonomy. criterion_check assigns the first that applies,
/// in the order SMALL_ORDER, SINGULAR_WALK_MATRIX, FAILS_ARITHMETIC (or
/// UNDECIDED_FACTORIZATION), EXCLUDED_CASE, CERTIFIED_DGAS.
enum class Verdict {
  kCertifiedDgas,
  kFailsArithmetic,
  kExcludedCase,
  kSingularWalkMatrix,
  kSmallOrder,
  kUndecidedFactorization,
};

std::string_view to_string(Verdict v);

inline constexpr std::size_t kMinCertifiableOrder = 5;

struct PrimeRank {
  BigInt prime;
  std::size_t rank = 0;
};

struct CriterionReport {
  std::size_t n = 0;
  AlphaParam alpha;
  std::string graph6;
  bool connected = false;

  BigInt det_walk;        // signed det of the modified walk matrix
  Rational reduced;       // det_walk / 2^floor(n/2)
  bool reduced_integral = false;
  bool is_odd = false;    // reduced is an odd integer
  std::optional<bool> is_square_free;  // unset when not attempted or undecided
  std::optional<BigInt> square_witness;
  std::optional<Factorization> factorization;  // of |reduced|
  std::vector<PrimeRank> prime_ranks;          // every odd p | c_alpha
  bool excluded_parity = false;                // n even and c_alpha odd >= 3

  Verdict verdict = Verdict::kSmallOrder;
  std::string reason;

  /// Membership in the family the criterion certifies: reduced is an odd
  /// square-free integer and W~ has full rank mod every odd p | c_alpha.
  bool arithmetic_passes() const;
};

CriterionReport criterion_check(const Graph& g, const AlphaParam& alpha,
                                const FactorOptions& options = {});

/// Expected elementary divisors of W~ for a graph passing the arithmetic
/// test: ceil(n/2) ones, floor(n/2) - 1 twos, then 2B with B odd square-free.
struct SnfShape {
  bool singular = false;
  bool holds = false;
  BigInt b;  // the odd part of the last divisor
  std::string detail;
};

SnfShape check_snf_shape(const std::vector<BigInt>& divisors, std::size_t n,
                         const FactorOptions& options = {});

}  // namespace dgas
