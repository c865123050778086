#include "permspec/groupalg.hpp"

#include <nlohmann/json.hpp>

#include "permspec/config.hpp"

namespace permspec {

GroupAlgebraElement<LinForm> element_of(StatKind kind, int n) {
  GroupAlgebraElement<LinForm> e;
  e.n = n;
  for (const Permutation& s : enumerate_group(n))
    e.coeffs.push_back(stat_value(kind, s));
  return e;
}

GroupAlgebraElement<LinForm> delta_element(const Permutation& s) {
  GroupAlgebraElement<LinForm> e;
  e.n = s.degree();
  e.coeffs.assign(static_cast<size_t>(factorial(e.n)), LinForm{});
  e.coeffs[static_cast<size_t>(rank_of(s))] = LinForm(Rational(1));
  return e;
}

GroupAlgebraElement<LinForm> add(const GroupAlgebraElement<LinForm>& a,
                                 const GroupAlgebraElement<LinForm>& b) {
  if (a.n != b.n) throw UsageError("group algebra add: degree mismatch");
  GroupAlgebraElement<LinForm> r = a;
  for (size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
  return r;
}

GroupAlgebraElement<LinForm> subtract_identity_multiple(
    const GroupAlgebraElement<LinForm>& a, const LinForm& c) {
  GroupAlgebraElement<LinForm> r = a;
  r.coeffs[0] -= c;  // identity has rank 0
  return r;
}

std::set<VarId> element_vars(const GroupAlgebraElement<LinForm>& a) {
  std::set<VarId> vars;
  for (const LinForm& c : a.coeffs) c.collect_vars(vars);
  return vars;
}

GroupAlgebraElement<Poly> convolve(const GroupAlgebraElement<LinForm>& a,
                                   const GroupAlgebraElement<LinForm>& b,
                                   bool override_cap) {
  if (a.n != b.n) throw UsageError("convolve: degree mismatch");
  const int n = a.n;
  if (!override_cap && n > default_caps().max_convolve_degree)
    throw ResourceError("convolve: degree " + std::to_string(n) +
                        " above cap " +
                        std::to_string(default_caps().max_convolve_degree));

  std::set<VarId> vars = element_vars(a);
  std::set<VarId> vb = element_vars(b);
  vars.insert(vb.begin(), vb.end());
  auto reg = VarRegistry::of(vars);

  const auto perms = enumerate_group(n);
  const size_t N = perms.size();
  std::vector<Poly> pa(N), pb(N);
  for (size_t i = 0; i < N; ++i) {
    pa[i] = Poly::from_linform(a.coeffs[i], reg);
    pb[i] = Poly::from_linform(b.coeffs[i], reg);
  }

  GroupAlgebraElement<Poly> out;
  out.n = n;
  out.coeffs.assign(N, Poly(reg));
  // (a*b)(tau) = sum_sigma a(sigma) b(sigma^-1 tau)
  for (size_t si = 0; si < N; ++si) {
    if (pa[si].is_zero()) continue;
    const Permutation sinv = inverse(perms[si]);
    for (size_t ti = 0; ti < N; ++ti) {
      const auto bi = static_cast<size_t>(rank_of(compose(sinv, perms[ti])));
      if (pb[bi].is_zero()) continue;
      out.coeffs[ti] += pa[si] * pb[bi];
    }
  }
  return out;
}

void dump_element_json(std::ostream& os, const GroupAlgebraElement<LinForm>& a) {
  nlohmann::json j;
  j["n"] = a.n;
  nlohmann::json coeffs = nlohmann::json::object();
  const auto perms = enumerate_group(a.n);
  for (size_t i = 0; i < perms.size(); ++i)
    coeffs[perms[i].str()] = a.coeffs[i].str();
  j["coeffs"] = std::move(coeffs);
  os << j.dump();
}

RegularMatrixTable::RegularMatrixTable(StatKind kind, int n)
    : kind_(kind), n_(n) {
  if (kind == StatKind::MFIX)
    throw UsageError("regular matrix: mfix is an oracle-only statistic, its "
                     "z_i never appear in matrices");
  if (n < 1 || n > default_caps().max_matrix_degree)
    throw ResourceError("regular matrix: degree " + std::to_string(n) +
                        " outside [1, " +
                        std::to_string(default_caps().max_matrix_degree) + "]");
  perms_ = enumerate_group(n);
  inverses_.reserve(perms_.size());
  for (const Permutation& p : perms_) inverses_.push_back(inverse(p));
  stats_.reserve(perms_.size());
  for (const Permutation& p : perms_) stats_.push_back(stat_value(kind, p));
  const size_t N = perms_.size();
  if (N <= 720) {  // 2 MB of ranks; beyond that compute on the fly
    product_rank_.resize(N * N);
    for (size_t i = 0; i < N; ++i)
      for (size_t j = 0; j < N; ++j)
        product_rank_[i * N + j] =
            static_cast<uint32_t>(rank_of(compose(perms_[i], inverses_[j])));
  }
}

size_t RegularMatrixTable::entry_rank(size_t i, size_t j) const {
  if (!product_rank_.empty()) return product_rank_[i * dim() + j];
  return static_cast<size_t>(rank_of(compose(perms_[i], inverses_[j])));
}

LinForm RegularMatrixTable::row_sum(size_t i) const {
  LinForm s;
  for (size_t j = 0; j < dim(); ++j) s += entry(i, j);
  return s;
}

LinForm RegularMatrixTable::trace() const {
  LinForm t;
  for (size_t i = 0; i < dim(); ++i) t += entry(i, i);
  return t;
}

std::set<VarId> RegularMatrixTable::vars() const {
  std::set<VarId> vars;
  for (const LinForm& s : stats_) s.collect_vars(vars);
  return vars;
}

Matrix<LinForm> RegularMatrixTable::dense() const {
  Matrix<LinForm> m(dim(), dim());
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = 0; j < dim(); ++j) m.at(i, j) = entry(i, j);
  return m;
}

Matrix<Rational> RegularMatrixTable::specialized(const Assignment& a) const {
  std::vector<Rational> values;
  values.reserve(stats_.size());
  for (const LinForm& s : stats_) values.push_back(s.eval(a));
  Matrix<Rational> m(dim(), dim());
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = 0; j < dim(); ++j) m.at(i, j) = values[entry_rank(i, j)];
  return m;
}

Matrix<LinForm> regular_matrix(StatKind kind, int n) {
  return RegularMatrixTable(kind, n).dense();
}

LinForm substitute_y_adjacent(const LinForm& f) {
  LinForm out = f;
  for (const auto& [v, c] : f.terms()) {
    if (v.kind == VarKind::Y && v.j == v.i + 1)
      out += LinForm::variable(VarId::x(v.i), c);
  }
  return out;
}

Matrix<LinForm> dif_by_substitution(int n) {
  Matrix<LinForm> m = regular_matrix(StatKind::INV_Y_PLUS_FIX_Z, n);
  Matrix<LinForm> r(m.rows(), m.cols());
  for (size_t i = 0; i < m.rows(); ++i)
    for (size_t j = 0; j < m.cols(); ++j)
      r.at(i, j) = substitute_y_adjacent(m.at(i, j));
  return r;
}

}  // namespace permspec
