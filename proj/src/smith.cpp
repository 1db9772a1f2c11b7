#include <algorithm>
#include <optional>
#include <utility>

#include "dgas/linalg.hpp"

namespace dgas {

namespace {

// Keeps m == v1 * s * v2 through every elementary operation on s.
class SmithReducer {
 public:
  explicit SmithReducer(const BigIntMatrix& m)
      : s_(m), v1_(BigIntMatrix::identity(m.rows())), v2_(BigIntMatrix::identity(m.cols())) {}

  SNFDecomposition run() {
    const std::size_t diag = std::min(s_.rows(), s_.cols());
    for (std::size_t t = 0; t < diag; ++t) {
      if (!reduce_at(t)) break;
      if (s_(t, t) < 0) negate_row(t);
    }
    SNFDecomposition out;
    out.rows = s_.rows();
    out.cols = s_.cols();
    out.divisors.resize(diag);
    for (std::size_t t = 0; t < diag; ++t) out.divisors[t] = s_(t, t);
    out.v1 = std::move(v1_);
    out.v2 = std::move(v2_);
    return out;
  }

 private:
  // row i += q * row j
  void add_row(std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t c = 0; c < s_.cols(); ++c) s_(i, c) += q * s_(j, c);
    for (std::size_t r = 0; r < v1_.rows(); ++r) v1_(r, j) -= q * v1_(r, i);
  }
  // col i += q * col j
  void add_col(std::size_t i, std::size_t j, const BigInt& q) {
    for (std::size_t r = 0; r < s_.rows(); ++r) s_(r, i) += q * s_(r, j);
    for (std::size_t c = 0; c < v2_.cols(); ++c) v2_(j, c) -= q * v2_(i, c);
  }
  void swap_rows(std::size_t i, std::size_t j) {
    s_.swap_rows(i, j);
    v1_.swap_cols(i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    s_.swap_cols(i, j);
    v2_.swap_rows(i, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < s_.cols(); ++c) s_(i, c) = -s_(i, c);
    for (std::size_t r = 0; r < v1_.rows(); ++r) v1_(r, i) = -v1_(r, i);
  }

  std::optional<std::pair<std::size_t, std::size_t>> smallest_entry(std::size_t t) const {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    for (std::size_t i = t; i < s_.rows(); ++i)
      for (std::size_t j = t; j < s_.cols(); ++j) {
        if (s_(i, j) == 0) continue;
        if (!best || mpz_cmpabs(s_(i, j).get_mpz_t(), s_(best->first, best->second).get_mpz_t()) < 0) best = {i, j};
      }
    return best;
  }

  // Quotient rounding to nearest keeps remainders at most |d|/2.
  static BigInt nearest_quotient(const BigInt& a, const BigInt& d) {
    BigInt q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
    // floor division leaves r with the sign of d, so q + 1 leaves r - d.
    if (2 * abs(r) > abs(d)) q += 1;
    return q;
  }

  // Returns false when the trailing submatrix is entirely zero.
  bool reduce_at(std::size_t t) {
    while (true) {
      auto pos = smallest_entry(t);
      if (!pos) return false;
      swap_rows(t, pos->first);
      swap_cols(t, pos->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < s_.rows(); ++i) {
        if (s_(i, t) == 0) continue;
        add_row(i, t, -nearest_quotient(s_(i, t), s_(t, t)));
        if (s_(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < s_.cols(); ++j) {
        if (s_(t, j) == 0) continue;
        add_col(j, t, -nearest_quotient(s_(t, j), s_(t, t)));
        if (s_(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Pivot must divide the whole trailing block.
      bool divides = true;
      for (std::size_t i = t + 1; i < s_.rows() && divides; ++i)
        for (std::size_t j = t + 1; j < s_.cols(); ++j) {
          if (!mpz_divisible_p(s_(i, j).get_mpz_t(), s_(t, t).get_mpz_t())) {
            add_row(t, i, 1);
            divides = false;
            break;
          }
        }
      if (divides) return true;
    }
  }

  BigIntMatrix s_;
  BigIntMatrix v1_;
  BigIntMatrix v2_;
};

}  // namespace

BigIntMatrix SNFDecomposition::diagonal() const {
  BigIntMatrix d(rows, cols);
  for (std::size_t t = 0; t < divisors.size(); ++t) d(t, t) = divisors[t];
  return d;
}

SNFDecomposition smith_normal_form(const BigIntMatrix& m) {
  return SmithReducer(m).run();
}

}  // namespace dgas
