#include "permspec/matrix_ops.hpp"

namespace permspec {

Matrix<Rational> specialize(const Matrix<LinForm>& m, const Assignment& a) {
  Matrix<Rational> r(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).eval(a);
  return r;
}

Matrix<Rational> specialize(const Matrix<Poly>& m, const Assignment& a) {
  Matrix<Rational> r(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) r.at(i, j) = m.at(i, j).eval(a);
  return r;
}

Matrix<Poly> to_poly_matrix(const Matrix<LinForm>& m,
                            std::shared_ptr<const VarRegistry> reg) {
  Matrix<Poly> r(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      r.at(i, j) = Poly::from_linform(m.at(i, j), reg);
  return r;
}

std::set<VarId> collect_vars(const Matrix<LinForm>& m) {
  std::set<VarId> vars;
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j) m.at(i, j).collect_vars(vars);
  return vars;
}

}  // namespace permspec
