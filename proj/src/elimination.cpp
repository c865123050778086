#include <gmp.h>

#include "permspec/matrix.hpp"

namespace permspec {

namespace {

// Fraction-free Gaussian elimination (one-step Bareiss) on an integer
// matrix. Determinant-division pivoting keeps every intermediate entry a
// minor of the input, so values stay exact and bounded. Pivot choice is the
// first nonzero entry in column order; this makes runs deterministic.
long long bareiss_rank(std::vector<std::vector<BigInt>>& a) {
  const size_t rows = a.size();
  if (rows == 0) return 0;
  const size_t cols = a[0].size();

  BigInt prev = 1;
  BigInt t1;
  size_t r = 0;
  for (size_t col = 0; col < cols && r < rows; ++col) {
    size_t piv = r;
    while (piv < rows && a[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) a[r].swap(a[piv]);

    const BigInt& p = a[r][col];
    const bool trivial_prev = (prev == 1);
    for (size_t i = r + 1; i < rows; ++i) {
      if (a[i][col] == 0) {
        // Still rescale so later divisions by `prev` stay exact.
        for (size_t j = col + 1; j < cols; ++j) {
          if (trivial_prev) {
            a[i][j] *= p;
          } else {
            mpz_mul(t1.get_mpz_t(), p.get_mpz_t(), a[i][j].get_mpz_t());
            mpz_divexact(a[i][j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
          }
        }
        continue;
      }
      for (size_t j = col + 1; j < cols; ++j) {
        mpz_mul(t1.get_mpz_t(), p.get_mpz_t(), a[i][j].get_mpz_t());
        mpz_submul(t1.get_mpz_t(), a[i][col].get_mpz_t(), a[r][j].get_mpz_t());
        if (trivial_prev)
          mpz_swap(a[i][j].get_mpz_t(), t1.get_mpz_t());
        else
          mpz_divexact(a[i][j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][col] = 0;
    }
    prev = p;
    ++r;
  }
  return static_cast<long long>(r);
}

}  // namespace

std::vector<std::vector<BigInt>> canonical_integer_rows(
    const Matrix<Rational>& m) {
  const size_t rows = m.rows(), cols = m.cols();
  std::vector<std::vector<BigInt>> a;
  a.reserve(rows);
  BigInt g, scale;
  for (size_t i = 0; i < rows; ++i) {
    // Scale the row integral (lcm of denominators), then strip its content;
    // both operations preserve rank.
    BigInt l = 1;
    for (size_t j = 0; j < cols; ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).den().get_mpz_t());
    std::vector<BigInt> row(cols);
    g = 0;
    for (size_t j = 0; j < cols; ++j) {
      const Rational& q = m.at(i, j);
      mpz_divexact(scale.get_mpz_t(), l.get_mpz_t(), q.den().get_mpz_t());
      row[j] = q.num() * scale;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), row[j].get_mpz_t());
    }
    if (g > 1)
      for (size_t j = 0; j < cols; ++j)
        mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), g.get_mpz_t());
    a.push_back(std::move(row));
  }
  return a;
}

long long bareiss_rank_inplace(std::vector<std::vector<BigInt>>& rows) {
  return bareiss_rank(rows);
}

long long rank(const Matrix<Rational>& m) {
  auto a = canonical_integer_rows(m);
  return bareiss_rank(a);
}

long long kernel_dim(const Matrix<Rational>& m) {
  if (!m.square()) throw UsageError("kernel_dim: matrix not square");
  return static_cast<long long>(m.rows()) - rank(m);
}

}  // namespace permspec
