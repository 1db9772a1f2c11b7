#include "dgas/number_theory.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>

#include "dgas/errors.hpp"

namespace dgas {

namespace {

const std::vector<unsigned long>& small_primes() {
  static const std::vector<unsigned long> primes = [] {
    std::vector<bool> composite(kTrialDivisionBound + 1, false);
    std::vector<unsigned long> out;
    for (unsigned long i = 2; i <= kTrialDivisionBound; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (unsigned long j = i * i; j <= kTrialDivisionBound; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

constexpr std::array<unsigned long, 13> kDeterministicBases = {2,  3,  5,  7,  11, 13, 17,
                                                               19, 23, 29, 31, 37, 41};

// Bases 2..41 decide every x below this bound (Sorenson & Webster).
const BigInt& deterministic_bound() {
  static const BigInt bound("3317044064679887385961981");
  return bound;
}

bool miller_rabin_round(const BigInt& n, const BigInt& nm1, const BigInt& d, unsigned long s,
                        const BigInt& base) {
  BigInt x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == nm1) return true;
  for (unsigned long r = 1; r < s; ++r) {
    x = x * x;
    mpz_mod(x.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
    if (x == nm1) return true;
    if (x == 1) return false;
  }
  return false;
}

using u128 = unsigned __int128;

BigInt from_u128(u128 v) {
  const std::uint64_t limbs[2] = {static_cast<std::uint64_t>(v), static_cast<std::uint64_t>(v >> 64)};
  BigInt out;
  mpz_import(out.get_mpz_t(), 2, -1, sizeof(std::uint64_t), 0, 0, limbs);
  return out;
}

u128 to_u128(const BigInt& v) {
  std::uint64_t limbs[2] = {0, 0};
  mpz_export(limbs, nullptr, -1, sizeof(std::uint64_t), 0, 0, v.get_mpz_t());
  return (static_cast<u128>(limbs[1]) << 64) | limbs[0];
}

// Montgomery arithmetic modulo an odd n < 2^126 with R = 2^128. The bound
// keeps hi + (m n)_hi + carry below 2n, so the reduction never overflows.
class Montgomery128 {
 public:
  static constexpr unsigned kMaxBits = 126;

  explicit Montgomery128(const BigInt& n) : n_(to_u128(n)) {
    u128 inv = n_;  // correct to 3 bits for odd n
    for (int i = 0; i < 7; ++i) inv *= 2 - n_ * inv;
    neg_inv_ = -inv;
    BigInt r2 = 1;
    r2 <<= 256;
    mpz_mod(r2.get_mpz_t(), r2.get_mpz_t(), n.get_mpz_t());
    r2_ = to_u128(r2);
  }

  u128 modulus() const { return n_; }
  u128 to_mont(u128 x) const { return mul(x, r2_); }

  u128 mul(u128 a, u128 b) const {
    u128 hi, lo;
    mul_full(a, b, hi, lo);
    const u128 m = lo * neg_inv_;
    u128 mhi, mlo;
    mul_full(m, n_, mhi, mlo);
    // lo + mlo vanishes mod 2^128; it carries exactly when lo != 0.
    u128 t = hi + mhi + (lo != 0 ? 1 : 0);
    return t >= n_ ? t - n_ : t;
  }

  u128 add(u128 a, u128 b) const {
    const u128 t = a + b;
    return t >= n_ ? t - n_ : t;
  }

 private:
  static void mul_full(u128 a, u128 b, u128& hi, u128& lo) {
    const std::uint64_t a0 = static_cast<std::uint64_t>(a), a1 = static_cast<std::uint64_t>(a >> 64);
    const std::uint64_t b0 = static_cast<std::uint64_t>(b), b1 = static_cast<std::uint64_t>(b >> 64);
    const u128 p00 = static_cast<u128>(a0) * b0;
    const u128 p01 = static_cast<u128>(a0) * b1;
    const u128 p10 = static_cast<u128>(a1) * b0;
    const u128 p11 = static_cast<u128>(a1) * b1;
    const u128 mid = (p00 >> 64) + static_cast<std::uint64_t>(p01) + static_cast<std::uint64_t>(p10);
    lo = (mid << 64) | static_cast<std::uint64_t>(p00);
    hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
  }

  u128 n_;
  u128 neg_inv_;
  u128 r2_;
};

class PollardBrent {
 public:
  PollardBrent(const FactorOptions& options) : budget_(options.effort), rng_(options.seed) {}

  void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out, unsigned mult) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
      out[n] += mult;
      return;
    }
    if (mpz_perfect_power_p(n.get_mpz_t())) {
      for (unsigned long k = mpz_sizeinbase(n.get_mpz_t(), 2); k >= 2; --k) {
        BigInt root;
        if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
          factor_into(root, out, mult * static_cast<unsigned>(k));
          return;
        }
      }
    }
    BigInt d = find_divisor(n);
    BigInt rest = n / d;
    factor_into(d, out, mult);
    factor_into(rest, out, mult);
  }

 private:
  void spend(const BigInt& n) {
    if (budget_ == 0)
      throw FactorizationIncomplete("factorization effort cap reached on a " +
                                    std::to_string(mpz_sizeinbase(n.get_mpz_t(), 10)) +
                                    "-digit cofactor");
    --budget_;
  }

  void step(BigInt& y, const BigInt& c, const BigInt& n) {
    spend(n);
    mpz_mul(y.get_mpz_t(), y.get_mpz_t(), y.get_mpz_t());
    mpz_add(y.get_mpz_t(), y.get_mpz_t(), c.get_mpz_t());
    mpz_mod(y.get_mpz_t(), y.get_mpz_t(), n.get_mpz_t());
  }

  BigInt random_below(const BigInt& n) {
    BigInt v = 0;
    for (int i = 0; i < 4; ++i) {
      v <<= 64;
      v += BigInt(static_cast<unsigned long>(rng_()));
    }
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    return v;
  }

  BigInt find_divisor(const BigInt& n) {
    if (mpz_even_p(n.get_mpz_t())) return 2;
    if (mpz_sizeinbase(n.get_mpz_t(), 2) <= Montgomery128::kMaxBits) return find_divisor_small(n);
    constexpr unsigned long kBatch = 128;
    BigInt diff, g;
    while (true) {
      const BigInt c = 1 + random_below(n - 1);
      BigInt y = random_below(n);
      BigInt x, ys, q = 1;
      g = 1;
      for (unsigned long r = 1; g == 1; r *= 2) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) step(y, c, n);
        for (unsigned long k = 0; k < r && g == 1; k += kBatch) {
          ys = y;
          const unsigned long lim = std::min(kBatch, r - k);
          for (unsigned long i = 0; i < lim; ++i) {
            step(y, c, n);
            mpz_sub(diff.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
            mpz_mul(q.get_mpz_t(), q.get_mpz_t(), diff.get_mpz_t());
            mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
          }
          mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
      }
      if (g == n) {
        // The batch overshot; replay it one step at a time.
        do {
          step(ys, c, n);
          mpz_sub(diff.get_mpz_t(), x.get_mpz_t(), ys.get_mpz_t());
          mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
      }
      if (g != n) return g;
    }
  }

  // The same Brent iteration on word-sized arithmetic. In Montgomery form the
  // map is y -> y^2 R^-1 + c, which is just as good a pseudo-random map mod p.
  BigInt find_divisor_small(const BigInt& n) {
    constexpr unsigned long kBatch = 128;
    const Montgomery128 mont(n);
    BigInt g;
    auto gcd_with_n = [&](u128 v) {
      mpz_gcd(g.get_mpz_t(), from_u128(v).get_mpz_t(), n.get_mpz_t());
    };
    auto f = [&](u128 y, u128 c) {
      spend(n);
      return mont.add(mont.mul(y, y), c);
    };
    while (true) {
      const u128 c = mont.to_mont(to_u128(1 + random_below(n - 1)));
      u128 y = mont.to_mont(to_u128(random_below(n)));
      u128 x = 0, ys = 0, q = mont.to_mont(1);
      g = 1;
      for (unsigned long r = 1; g == 1; r *= 2) {
        x = y;
        for (unsigned long i = 0; i < r; ++i) y = f(y, c);
        for (unsigned long k = 0; k < r && g == 1; k += kBatch) {
          ys = y;
          const unsigned long lim = std::min(kBatch, r - k);
          for (unsigned long i = 0; i < lim; ++i) {
            y = f(y, c);
            q = mont.mul(q, x > y ? x - y : y - x);
          }
          gcd_with_n(q);
        }
      }
      if (g == n) {
        do {
          ys = f(ys, c);
          gcd_with_n(x > ys ? x - ys : ys - x);
        } while (g == 1);
      }
      if (g != n) return g;
    }
  }

  std::uint64_t budget_;
  std::mt19937_64 rng_;
};

}  // namespace

BigInt Factorization::product() const {
  BigInt p = 1;
  for (const auto& f : factors) {
    BigInt pw;
    mpz_pow_ui(pw.get_mpz_t(), f.prime.get_mpz_t(), f.exponent);
    p *= pw;
  }
  return p;
}

bool is_probable_prime(const BigInt& x) {
  if (x <= 1) throw DomainError("is_probable_prime expects x > 1");
  for (unsigned long p : kDeterministicBases) {
    if (x == p) return true;
    if (mpz_divisible_ui_p(x.get_mpz_t(), p)) return false;
  }
  const BigInt nm1 = x - 1;
  BigInt d = nm1;
  const unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

  for (unsigned long b : kDeterministicBases)
    if (!miller_rabin_round(x, nm1, d, s, BigInt(b))) return false;
  if (x < deterministic_bound()) return true;

  gmp_randclass rng(gmp_randinit_mt);
  rng.seed(x);
  const BigInt span = x - 3;
  for (int round = 0; round < 64; ++round) {
    BigInt base = rng.get_z_range(span) + 2;  // [2, x-2]
    if (!miller_rabin_round(x, nm1, d, s, base)) return false;
  }
  return true;
}

Factorization factorize(const BigInt& x, const FactorOptions& options) {
  if (x < 1) throw DomainError("factorize expects x >= 1");
  Factorization out;
  out.input = x;
  std::map<BigInt, unsigned> found;
  BigInt rest = x;
  for (unsigned long p : small_primes()) {
    if (mpz_cmp_ui(rest.get_mpz_t(), p * p) < 0) break;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    if (e > 0) found[BigInt(p)] = e;
  }
  if (rest > 1) PollardBrent(options).factor_into(rest, found, 1);
  for (auto& [p, e] : found) out.factors.push_back({p, e});
  return out;
}

SquareFreeResult is_square_free(const BigInt& x, const FactorOptions& options) {
  SquareFreeResult r;
  for (const auto& f : factorize(x, options).factors) {
    if (f.exponent >= 2) {
      r.square_free = false;
      r.witness = f.prime;
      break;
    }
  }
  return r;
}

std::vector<BigInt> odd_prime_divisors(const BigInt& c, const FactorOptions& options) {
  std::vector<BigInt> out;
  for (const auto& f : factorize(c, options).factors)
    if (f.prime != 2) out.push_back(f.prime);
  return out;
}

}  // namespace dgas
