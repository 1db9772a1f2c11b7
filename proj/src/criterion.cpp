#include "dgas/criterion.hpp"

#include "dgas/errors.hpp"

namespace dgas {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kCertifiedDgas: return "CERTIFIED_DGAS";
    case Verdict::kFailsArithmetic: return "FAILS_ARITHMETIC";
    case Verdict::kExcludedCase: return "EXCLUDED_CASE";
    case Verdict::kSingularWalkMatrix: return "SINGULAR_WALK_MATRIX";
    case Verdict::kSmallOrder: return "SMALL_ORDER";
    case Verdict::kUndecidedFactorization: return "UNDECIDED_FACTORIZATION";
  }
  return "UNKNOWN";
}

bool CriterionReport::arithmetic_passes() const {
  if (det_walk == 0 || !reduced_integral || !is_odd) return false;
  if (!is_square_free.value_or(false)) return false;
  for (const auto& pr : prime_ranks)
    if (pr.rank != n) return false;
  return true;
}

CriterionReport criterion_check(const Graph& g, const AlphaParam& alpha,
                                const FactorOptions& options) {
  CriterionReport r;
  r.n = g.order();
  r.alpha = alpha;
  r.graph6 = encode_graph6(g);
  r.connected = g.is_connected();
  r.excluded_parity = r.n % 2 == 0 && alpha.c_alpha % 2 == 1 && alpha.c_alpha >= 3;

  const BigIntMatrix w = walk_matrix(g, alpha);
  r.det_walk = det_bareiss(w);

  BigInt pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, r.n / 2);
  r.reduced = Rational(r.det_walk, pow2);
  r.reduced.canonicalize();
  r.reduced_integral = r.reduced.get_den() == 1;
  r.is_odd = r.reduced_integral && mpz_odd_p(r.reduced.get_num().get_mpz_t());

  bool undecided = false;
  if (r.is_odd) {
    try {
      auto f = factorize(abs(r.reduced.get_num()), options);
      bool sf = true;
      for (const auto& pp : f.factors)
        if (pp.exponent >= 2) {
          sf = false;
          r.square_witness = pp.prime;
          break;
        }
      r.is_square_free = sf;
      r.factorization = std::move(f);
    } catch (const FactorizationIncomplete&) {
      undecided = true;
    }
  }

  if (alpha.c_alpha > 1) {
    for (const auto& p : odd_prime_divisors(BigInt(static_cast<long>(alpha.c_alpha)), options))
      r.prime_ranks.push_back({p, rank_mod_p(w, p)});
  }

  if (r.n < kMinCertifiableOrder) {
    r.verdict = Verdict::kSmallOrder;
    r.reason = "order below 5; the criterion is not applied";
    return r;
  }
  if (r.det_walk == 0) {
    r.verdict = Verdict::kSingularWalkMatrix;
    r.reason = "det of the walk matrix is zero";
    return r;
  }
  if (!r.reduced_integral) {
    r.verdict = Verdict::kFailsArithmetic;
    r.reason = "det is not divisible by 2^floor(n/2)";
    return r;
  }
  if (!r.is_odd) {
    r.verdict = Verdict::kFailsArithmetic;
    r.reason = "det / 2^floor(n/2) is even";
    return r;
  }
  if (undecided) {
    r.verdict = Verdict::kUndecidedFactorization;
    r.reason = "factorization effort cap reached before square-freeness was settled";
    return r;
  }
  if (!*r.is_square_free) {
    r.verdict = Verdict::kFailsArithmetic;
    r.reason = "det / 2^floor(n/2) is divisible by " + r.square_witness->get_str() + "^2";
    return r;
  }
  for (const auto& pr : r.prime_ranks) {
    if (pr.rank < r.n) {
      r.verdict = Verdict::kFailsArithmetic;
      r.reason = "walk matrix is rank-deficient over F_" + pr.prime.get_str();
      return r;
    }
  }
  if (r.excluded_parity) {
    r.verdict = Verdict::kExcludedCase;
    r.reason = "arithmetic passes, but n is even and c_alpha is odd >= 3";
    return r;
  }
  r.verdict = Verdict::kCertifiedDgas;
  r.reason = "arithmetic criterion satisfied";
  return r;
}

SnfShape check_snf_shape(const std::vector<BigInt>& divisors, std::size_t n,
                         const FactorOptions& options) {
  SnfShape s;
  if (divisors.size() != n) throw DimensionError("expected n elementary divisors");
  if (n == 0 || divisors.back() == 0) {
    s.singular = true;
    s.detail = "walk matrix is singular";
    return s;
  }
  const std::size_t ones = (n + 1) / 2;
  const std::size_t twos = n / 2 == 0 ? 0 : n / 2 - 1;
  for (std::size_t i = 0; i < ones; ++i)
    if (divisors[i] != 1) {
      s.detail = "divisor " + std::to_string(i + 1) + " is " + divisors[i].get_str() + ", expected 1";
      return s;
    }
  for (std::size_t i = ones; i < ones + twos; ++i)
    if (divisors[i] != 2) {
      s.detail = "divisor " + std::to_string(i + 1) + " is " + divisors[i].get_str() + ", expected 2";
      return s;
    }
  if (n / 2 == 0) {
    s.b = divisors.back();
    s.holds = true;
    return s;
  }
  const BigInt& last = divisors.back();
  if (mpz_odd_p(last.get_mpz_t())) {
    s.detail = "last divisor " + last.get_str() + " is odd, expected 2B";
    return s;
  }
  s.b = last / 2;
  if (mpz_even_p(s.b.get_mpz_t())) {
    s.detail = "last divisor is divisible by 4";
    return s;
  }
  auto sf = is_square_free(s.b, options);
  if (!sf.square_free) {
    s.detail = "B is divisible by " + sf.witness->get_str() + "^2";
    return s;
  }
  s.holds = true;
  return s;
}

}  // namespace dgas
