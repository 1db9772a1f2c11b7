#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

namespace dgas {

using BigInt = mpz_class;

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

struct Factorization {
  BigInt input;
  std::vector<PrimePower> factors;  // strictly increasing primes
  bool complete = true;

  BigInt product() const;
};

struct FactorOptions {
  /// Budget of Pollard-rho iterations for one factorize() call.
  std::uint64_t effort = 200'000'000;
  /// Seeds the rho polynomial constants and starting points.
  std::uint64_t seed = 0x243F6A8885A308D3ULL;
};

inline constexpr unsigned long kTrialDivisionBound = 1'000'000;

/// Miller-Rabin. Deterministic (first 13 prime bases) below 3.3e24, otherwise
/// those bases plus 64 pseudo-random ones derived from x. Throws for x <= 1.
bool is_probable_prime(const BigInt& x);

/// Trial division up to 10^6, then Pollard-rho with Brent's cycle detection.
/// Throws FactorizationIncomplete when the effort budget is exhausted.
Factorization factorize(const BigInt& x, const FactorOptions& options = {});

struct SquareFreeResult {
  bool square_free = true;
  std::optional<BigInt> witness;  // smallest prime whose square divides x
};

/// 1 counts as square-free.
SquareFreeResult is_square_free(const BigInt& x, const FactorOptions& options = {});

std::vector<BigInt> odd_prime_divisors(const BigInt& c, const FactorOptions& options = {});

}  // namespace dgas
