#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dgas/alpha.hpp"
#include "dgas/criterion.hpp"

namespace dgas {

/// Pairwise non-isomorphic graphs sharing one spectrum key.
struct MateClass {
  SpectrumKey key;
  std::vector<Graph> members;
  std::vector<std::size_t> input_indices;  // first input position of each member
};

/// Groups by spectrum key, then drops isomorphic duplicates inside each group.
/// Classes come out in order of first appearance in the input.
std::vector<MateClass> find_mate_classes(std::span<const Graph> graphs, const AlphaParam& alpha,
                                         std::size_t threads = 1);

/// The rational orthogonal U with U 1 = 1 and U^T A_c(source) U = A_c(target).
struct OrthogonalCertificate {
  RationalMatrix u;
  BigInt level;
  std::string source;  // graph6
  std::string target;
};

/// Least common multiple of the (reduced) entry denominators.
BigInt level(const RationalMatrix& u);

/// Solves U^T W(g) = W(h) on the unscaled walk matrices and checks every
/// certificate invariant before returning.
OrthogonalCertificate build_u(const Graph& g, const Graph& h, const AlphaParam& alpha);

/// Certificate for one ordered mate pair plus the theorem-instance checks.
struct CertificateCheck {
  OrthogonalCertificate cert;
  BigInt last_divisor;              // s_n of W~(source)
  bool level_divides_last = false;  // level | s_n
  /// Odd primes p | level at which the source meets the single-prime
  /// hypotheses (p^2 does not divide det W~, and W~ has full rank mod p
  /// when p | c_alpha). Any entry is a violation.
  std::vector<BigInt> odd_prime_violations;
  bool source_in_family = false;  // source passes the full arithmetic test
  bool parity_applies = false;    // source in family, n >= 5, not the excluded parity case
  bool level_odd = false;

  bool ok() const {
    return level_divides_last && odd_prime_violations.empty() && (!parity_applies || level_odd) &&
           cert.level > 1;
  }
};

struct OracleOptions {
  std::size_t threads = 1;
  FactorOptions factor;
};

struct VerificationReport {
  AlphaParam alpha;
  std::vector<CriterionReport> reports;  // one per input graph
  std::vector<MateClass> classes;
  std::vector<std::size_t> class_of;      // input index -> class index
  std::vector<std::size_t> certified;     // input indices with CERTIFIED_DGAS
  std::vector<std::size_t> counterexample_classes;  // class indices
  std::vector<CertificateCheck> certificates;
  std::size_t singular_pairs_skipped = 0;
  /// Non-isomorphic pairs that share charpoly(A_c(G)) but not the complement's.
  std::vector<std::pair<std::string, std::string>> plain_cospectral_only;

  std::size_t certificate_failures() const;
  bool ok() const { return counterexample_classes.empty() && certificate_failures() == 0; }
};

VerificationReport verify_theorem(std::span<const Graph> graphs, const AlphaParam& alpha,
                                  const OracleOptions& options = {});

}  // namespace dgas
