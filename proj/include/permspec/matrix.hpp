#pragma once

#include <cstddef>
#include <vector>

#include "permspec/errors.hpp"
#include "permspec/rational.hpp"

namespace permspec {

// Dense row-major matrix over an exact entry type (Rational, LinForm, Poly).
// Entries are value types; matrices are immutable by convention once built.
template <class E>
class Matrix {
 public:
  Matrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(size_t rows, size_t cols, E fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  E& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const E& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  E trace() const {
    if (!square()) throw UsageError("trace: matrix not square");
    E t{};
    for (size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
  }

  Matrix transposed() const {
    Matrix r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  bool is_zero() const {
    for (const E& e : data_)
      if (!e.is_zero()) return false;
    return true;
  }

 private:
  size_t rows_, cols_;
  std::vector<E> data_;
};

template <>
inline bool Matrix<Rational>::is_zero() const {
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) return false;
  return true;
}

template <class E>
Matrix<E> mat_mul(const Matrix<E>& a, const Matrix<E>& b) {
  if (a.cols() != b.rows()) throw UsageError("mat_mul: dimension mismatch");
  Matrix<E> r(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t k = 0; k < a.cols(); ++k) {
      const E& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (size_t j = 0; j < b.cols(); ++j) {
        const E& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

template <class E>
Matrix<E> mat_add(const Matrix<E>& a, const Matrix<E>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw UsageError("mat_add: dimension mismatch");
  Matrix<E> r = a;
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r.at(i, j) += b.at(i, j);
  return r;
}

// m - lambda * I
template <class E>
Matrix<E> shift_diagonal(const Matrix<E>& m, const E& lambda) {
  if (!m.square()) throw UsageError("shift_diagonal: matrix not square");
  Matrix<E> r = m;
  for (size_t i = 0; i < m.rows(); ++i) r.at(i, i) -= lambda;
  return r;
}

inline Matrix<Rational> rational_identity(size_t n) {
  Matrix<Rational> m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

// Exact rank by fraction-free (Bareiss) elimination with row pivoting;
// column skipped when no pivot remains. Rows are first scaled integral and
// stripped of content, which preserves rank.
long long rank(const Matrix<Rational>& m);

long long kernel_dim(const Matrix<Rational>& m);

// The two halves of rank(), exposed so callers certifying many
// specializations can recognize equal canonical inputs and reuse results.
std::vector<std::vector<BigInt>> canonical_integer_rows(
    const Matrix<Rational>& m);
long long bareiss_rank_inplace(std::vector<std::vector<BigInt>>& rows);

}  // namespace permspec
