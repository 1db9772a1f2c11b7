#include "dgas/linalg.hpp"

#include <algorithm>

#include "dgas/number_theory.hpp"

namespace dgas {

RationalMatrix to_rational(const BigIntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = Rational(m(r, c));
  return out;
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  std::string out;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    const BigInt& c = coeffs[k];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1 || k == 0) out += mag.get_str();
    if (k >= 1) out += var;
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

bool operator<(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.coeffs.size() != b.coeffs.size()) return a.coeffs.size() < b.coeffs.size();
  return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(),
                                      b.coeffs.end());
}

BigInt det_bareiss(const BigIntMatrix& input) {
  if (!input.square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  BigIntMatrix m = input;
  int sign = 1;
  BigInt prev = 1;
  BigInt t;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t i = k + 1;
      while (i < n && m(i, k) == 0) ++i;
      if (i == n) return 0;
      m.swap_rows(i, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

IntPolynomial charpoly(const BigIntMatrix& a) {
  if (!a.square()) throw DimensionError("characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  IntPolynomial p;
  p.coeffs.assign(n + 1, 0);
  p.coeffs[n] = 1;
  BigIntMatrix m = BigIntMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    BigIntMatrix am = a * m;
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    BigInt c;
    mpz_divexact_ui(c.get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
    c = -c;
    p.coeffs[n - k] = c;
    if (k < n) {
      for (std::size_t i = 0; i < n; ++i) am(i, i) += c;
      m = std::move(am);
    }
  }
  return p;
}

std::size_t rank_mod_p(const BigIntMatrix& input, const BigInt& p) {
  if (p < 2 || !is_probable_prime(p)) throw DomainError("rank_mod_p: modulus is not prime");
  BigIntMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      mpz_fdiv_r(m(r, c).get_mpz_t(), m(r, c).get_mpz_t(), p.get_mpz_t());

  std::size_t rank = 0;
  BigInt inv;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    m.swap_rows(piv, rank);
    mpz_invert(inv.get_mpz_t(), m(rank, c).get_mpz_t(), p.get_mpz_t());
    for (std::size_t j = c; j < cols; ++j) {
      m(rank, j) *= inv;
      mpz_fdiv_r(m(rank, j).get_mpz_t(), m(rank, j).get_mpz_t(), p.get_mpz_t());
    }
    for (std::size_t i = rank + 1; i < rows; ++i) {
      if (m(i, c) == 0) continue;
      BigInt f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        m(i, j) -= f * m(rank, j);
        mpz_fdiv_r(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), p.get_mpz_t());
      }
    }
    ++rank;
  }
  return rank;
}

bool congruence_solvable(const BigIntMatrix& m, const BigInt& p) {
  if (!m.square()) throw DimensionError("congruence_solvable expects a square matrix");
  if (p < 2 || !is_probable_prime(p)) throw DomainError("congruence_solvable: modulus is not prime");
  if (m.rows() == 0) return false;
  const auto snf = smith_normal_form(m);
  const BigInt p2 = p * p;
  return mpz_divisible_p(snf.last().get_mpz_t(), p2.get_mpz_t()) != 0;
}

RationalMatrix rational_inverse(const BigIntMatrix& input) {
  if (!input.square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = input.rows();
  RationalMatrix a = to_rational(input);
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) throw SingularMatrixError("matrix is singular");
    a.swap_rows(piv, c);
    inv.swap_rows(piv, c);
    const Rational scale = 1 / a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) *= scale;
      inv(c, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

}  // namespace dgas
