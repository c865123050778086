#pragma once

#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "permspec/assignment.hpp"
#include "permspec/linform.hpp"
#include "permspec/matrix.hpp"
#include "permspec/poly.hpp"

namespace permspec {

Matrix<Rational> specialize(const Matrix<LinForm>& m, const Assignment& a);
Matrix<Rational> specialize(const Matrix<Poly>& m, const Assignment& a);

Matrix<Poly> to_poly_matrix(const Matrix<LinForm>& m,
                            std::shared_ptr<const VarRegistry> reg);

std::set<VarId> collect_vars(const Matrix<LinForm>& m);

// CSV with permutation (or other) labels on the first row and column.
// Every field is quoted since both labels and entries contain commas.
template <class E>
void dump_csv(std::ostream& os, const Matrix<E>& m,
              const std::vector<std::string>& row_labels,
              const std::vector<std::string>& col_labels) {
  auto q = [](const std::string& s) { return "\"" + s + "\""; };
  os << q("");
  for (const auto& c : col_labels) os << "," << q(c);
  os << "\n";
  for (size_t i = 0; i < m.rows(); ++i) {
    os << q(row_labels[i]);
    for (size_t j = 0; j < m.cols(); ++j) os << "," << q(m.at(i, j).str());
    os << "\n";
  }
}

}  // namespace permspec
