#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "dgas/errors.hpp"

namespace dgas {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }
  void set_column(std::size_t c, const std::vector<T>& v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (a.data_[i] != b.data_[i]) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product: inner dimensions differ");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) throw DimensionError("matrix-vector product: size mismatch");
    std::vector<T> out(a.rows_, T(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) out[i] += a(i, k) * v[k];
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum: shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference: shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using BigIntMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<Rational>;

RationalMatrix to_rational(const BigIntMatrix& m);

/// Integer polynomial c0 + c1 x + ... + cd x^d.
struct IntPolynomial {
  std::vector<BigInt> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  BigInt evaluate(const BigInt& x) const;
  /// Human-readable form, e.g. "x^3 - 3x - 2".
  std::string to_string(const std::string& var = "x") const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
    return a.coeffs == b.coeffs;
  }
  friend bool operator<(const IntPolynomial& a, const IntPolynomial& b);
};

BigInt det_bareiss(const BigIntMatrix& m);

/// det(xI - m), computed by the Faddeev-LeVerrier recursion. Every division
/// by k in the recursion is exact for integer input.
IntPolynomial charpoly(const BigIntMatrix& m);

/// Rank over F_p. Rejects p that fails a probable-prime test.
std::size_t rank_mod_p(const BigIntMatrix& m, const BigInt& p);

/// m = v1 * diag(divisors) * v2, v1 and v2 unimodular, divisors nonnegative
/// with divisors[i] | divisors[i+1].
struct SNFDecomposition {
  std::vector<BigInt> divisors;
  BigIntMatrix v1;
  BigIntMatrix v2;
  std::size_t rows = 0;
  std::size_t cols = 0;

  BigIntMatrix diagonal() const;
  BigIntMatrix recompose() const { return v1 * diagonal() * v2; }
  const BigInt& last() const { return divisors.back(); }
};

SNFDecomposition smith_normal_form(const BigIntMatrix& m);

/// Whether m x = 0 (mod p^2) has a solution x != 0 (mod p); equivalent to
/// p^2 dividing the last elementary divisor.
bool congruence_solvable(const BigIntMatrix& m, const BigInt& p);

RationalMatrix rational_inverse(const BigIntMatrix& m);

}  // namespace dgas
