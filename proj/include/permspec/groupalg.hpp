#pragma once

#include <cstdint>
#include <memory>
#include <ostream>
#include <set>
#include <vector>

#include "permspec/linform.hpp"
#include "permspec/matrix.hpp"
#include "permspec/matrix_ops.hpp"
#include "permspec/perm.hpp"
#include "permspec/poly.hpp"
#include "permspec/stats.hpp"

namespace permspec {

// Element of the group algebra with one coefficient per permutation,
// indexed by lexicographic rank. Coeff is LinForm for statistic elements
// and Poly for convolution outputs.
template <class Coeff>
struct GroupAlgebraElement {
  int n = 0;
  std::vector<Coeff> coeffs;  // length n!

  Coeff sum_of_coeffs() const {
    Coeff s{};
    for (const Coeff& c : coeffs) s += c;
    return s;
  }
};

// sum_sigma stat(sigma) sigma
GroupAlgebraElement<LinForm> element_of(StatKind kind, int n);

// Coefficient 1 on s, 0 elsewhere.
GroupAlgebraElement<LinForm> delta_element(const Permutation& s);

GroupAlgebraElement<LinForm> add(const GroupAlgebraElement<LinForm>& a,
                                 const GroupAlgebraElement<LinForm>& b);

// Scales the identity coefficient only: a - c * delta_iota.
GroupAlgebraElement<LinForm> subtract_identity_multiple(
    const GroupAlgebraElement<LinForm>& a, const LinForm& c);

// Group-algebra product: (a*b)(tau) = sum_sigma a(sigma) b(sigma^-1 tau).
// O((n!)^2) coefficient multiplications; `override_cap` lifts the default
// degree cap for callers that know their coefficients are cheap.
GroupAlgebraElement<Poly> convolve(const GroupAlgebraElement<LinForm>& a,
                                   const GroupAlgebraElement<LinForm>& b,
                                   bool override_cap = false);

std::set<VarId> element_vars(const GroupAlgebraElement<LinForm>& a);

// {"n": 3, "coeffs": {"1,2,3": "3*z", ...}}
void dump_element_json(std::ostream& os, const GroupAlgebraElement<LinForm>& a);

// The n! x n! regular representation of element_of(kind, n) without
// materializing n!^2 linear forms: entry (i,j) = stat(sigma_i sigma_j^-1)
// looked up in a table of the n! distinct statistic values.
class RegularMatrixTable {
 public:
  RegularMatrixTable(StatKind kind, int n);

  int n() const { return n_; }
  StatKind kind() const { return kind_; }
  size_t dim() const { return perms_.size(); }
  const std::vector<Permutation>& perms() const { return perms_; }

  const LinForm& entry(size_t i, size_t j) const {
    return stats_[entry_rank(i, j)];
  }
  // rank of sigma_i * sigma_j^-1
  size_t entry_rank(size_t i, size_t j) const;

  const LinForm& stat_of_rank(size_t r) const { return stats_[r]; }

  LinForm row_sum(size_t i) const;
  LinForm trace() const;
  std::set<VarId> vars() const;

  Matrix<LinForm> dense() const;
  Matrix<Rational> specialized(const Assignment& a) const;

 private:
  StatKind kind_;
  int n_;
  std::vector<Permutation> perms_;
  std::vector<Permutation> inverses_;
  std::vector<LinForm> stats_;          // by rank
  std::vector<uint32_t> product_rank_;  // dim x dim when small enough
};

// Dense regular representation matrix; row/column order is the
// lexicographic rank from enumerate_group. Memory is n!^2 linear forms,
// so callers should prefer RegularMatrixTable beyond n = 5.
Matrix<LinForm> regular_matrix(StatKind kind, int n);

// Applies y_{i,i+1} -> x_i + y_{i,i+1} to every entry of the inv+fix
// matrix; equals the des+inv+fix matrix entrywise.
Matrix<LinForm> dif_by_substitution(int n);

LinForm substitute_y_adjacent(const LinForm& f);

}  // namespace permspec
