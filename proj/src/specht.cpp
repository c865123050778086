#include "permspec/specht.hpp"

#include "permspec/assignment.hpp"
#include "permspec/matrix_ops.hpp"
#include "permspec/poly.hpp"

namespace permspec {

namespace {

template <class Coeff>
Matrix<Coeff> specht_action_impl(const GroupAlgebraElement<Coeff>& e) {
  const int n = e.n;
  if (n < 2) throw UsageError("specht_action: degree must be >= 2");
  const auto perms = enumerate_group(n);

  // first[j] = sum of coefficients over sigma(1) = j,
  // pos[i][j] = sum over sigma(i) = j. The action on v_i = e_1 - e_i then
  // has v_j-coordinate pos[i][j] - first[j] (read off at position j after
  // eliminating e_1 by the sum-zero relation).
  std::vector<Coeff> first(static_cast<size_t>(n) + 1);
  std::vector<std::vector<Coeff>> pos(
      static_cast<size_t>(n) + 1,
      std::vector<Coeff>(static_cast<size_t>(n) + 1));
  for (size_t r = 0; r < perms.size(); ++r) {
    const Coeff& c = e.coeffs[r];
    if (c.is_zero()) continue;
    const Permutation& s = perms[r];
    first[static_cast<size_t>(s(1))] += c;
    for (int i = 2; i <= n; ++i)
      pos[static_cast<size_t>(i)][static_cast<size_t>(s(i))] += c;
  }

  const size_t d = static_cast<size_t>(n) - 1;
  Matrix<Coeff> m(d, d);
  for (int i = 2; i <= n; ++i) {
    // sum-zero sanity: total coefficient mass entering equals mass leaving
    Coeff balance{};
    for (int j = 1; j <= n; ++j) {
      balance += first[static_cast<size_t>(j)];
      balance -= pos[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
    if (!balance.is_zero())
      throw InternalError("specht_action: sum-zero extraction failed");
    for (int j = 2; j <= n; ++j) {
      Coeff entry = pos[static_cast<size_t>(i)][static_cast<size_t>(j)];
      entry -= first[static_cast<size_t>(j)];
      m.at(static_cast<size_t>(j) - 2, static_cast<size_t>(i) - 2) =
          std::move(entry);
    }
  }
  return m;
}

}  // namespace

Matrix<LinForm> specht_action(const GroupAlgebraElement<LinForm>& e) {
  return specht_action_impl(e);
}

Matrix<Poly> specht_action(const GroupAlgebraElement<Poly>& e) {
  return specht_action_impl(e);
}

namespace {

void check_leyij_args(int n, int i, int j, int which) {
  if (n < 4) throw UsageError("leyij: n must be >= 4");
  if (i < 2 || i > n || j < 2 || j > n)
    throw UsageError("leyij: i, j must lie in [n] \\ {1}");
  if (which < 1 || which > 4) throw UsageError("leyij: item must be 1..4");
}

}  // namespace

LinForm leyij_sum_bruteforce(int n, int i, int j, int which) {
  check_leyij_args(n, i, j, which);
  LinForm total;
  for (const Permutation& s : enumerate_group(n)) {
    bool in_set = false;
    switch (which) {
      case 1: in_set = s(1) == 1 && s(i) == j; break;
      case 2: in_set = s(1) == j && s(i) == 1; break;
      case 3: in_set = s(1) != 1 && s(i) == j; break;
      case 4: in_set = s(1) == j && s(i) != 1; break;
    }
    if (in_set) total += stat_value(StatKind::INV_Y, s);
  }
  return total;
}

LinForm leyij_sum_closed(int n, int i, int j, int which) {
  check_leyij_args(n, i, j, which);
  const Rational f2(factorial(n - 2));
  const Rational f3(factorial(n - 3));
  LinForm out;
  auto add_y = [&out](int a, int b, const Rational& c) {
    out += LinForm::variable(VarId::y(a, b), c);
  };
  // shared tail: (c/1) * sum_{l<m in [n] \ {1,i}} y_{l,m}
  auto add_rest_pairs = [&](const Rational& c) {
    for (int l = 2; l <= n; ++l) {
      if (l == i) continue;
      for (int m = l + 1; m <= n; ++m) {
        if (m == i) continue;
        add_y(l, m, c);
      }
    }
  };
  switch (which) {
    case 1:
      for (int l = 2; l <= i - 1; ++l) add_y(l, i, Rational(n - j) * f3);
      for (int m = i + 1; m <= n; ++m) add_y(i, m, Rational(j - 2) * f3);
      add_rest_pairs(f2 / Rational(2));
      break;
    case 2:
      add_y(1, i, f2);
      for (int m = 2; m <= n; ++m)
        if (m != i) add_y(1, m, Rational(j - 2) * f3);
      for (int l = 2; l <= i - 1; ++l) add_y(l, i, Rational(n - 2) * f3);
      add_rest_pairs(f2 / Rational(2));
      break;
    case 3:
      add_y(1, i, Rational(n - j) * f2);
      for (int m = 2; m <= n; ++m)
        if (m != i) add_y(1, m, Rational(binomial(n - 1, 2)) * f3);
      for (int m = i + 1; m <= n; ++m)
        add_y(i, m, Rational((j - 1) * (n - 4) + j) * f3);
      for (int l = 2; l <= i - 1; ++l)
        add_y(l, i, Rational(n - j) * Rational(n - 3) * f3);
      add_rest_pairs(Rational(n - 2) / Rational(2) * f2);
      break;
    case 4:
      add_y(1, i, Rational(j - 2) * f2);
      for (int m = 2; m <= n; ++m)
        if (m != i) add_y(1, m, Rational((j - 1) * (n - 4) + j) * f3);
      for (int l = 2; l <= i - 1; ++l)
        add_y(l, i, Rational(binomial(n - 2, 2)) * f3);
      for (int m = i + 1; m <= n; ++m)
        add_y(i, m, Rational(binomial(n - 1, 2)) * f3);
      add_rest_pairs(Rational(n - 2) / Rational(2) * f2);
      break;
  }
  return out;
}

LinForm prinv_column_form(int n, int i) {
  LinForm x = LinForm::variable(VarId::y(1, i), Rational(2));
  for (int m = 2; m <= n; ++m)
    if (m != i) x += LinForm::variable(VarId::y(1, m));
  for (int l = 2; l <= i - 1; ++l) x += LinForm::variable(VarId::y(l, i));
  for (int m = i + 1; m <= n; ++m) x -= LinForm::variable(VarId::y(i, m));
  return x;
}

LinForm leg_form(int n) {
  if (n < 4) throw UsageError("leg_form: n must be >= 4");
  const Rational f2(factorial(n - 2));
  LinForm defining;
  for (int i = 2; i <= n; ++i) {
    const Rational coeff = Rational(n - 2 * i + 1) / Rational(2) * f2;
    defining += prinv_column_form(n, i) * coeff;
  }
  LinForm closed;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      closed += LinForm::variable(VarId::y(i, j), -f2 * Rational(j - i));
  if (defining != closed)
    throw InternalError("leg_form: defining sum and closed form disagree at n=" +
                        std::to_string(n));
  return closed;
}

std::vector<SpectrumPair> lex_spectrum(const std::vector<Rational>& lambda,
                                       const std::vector<LinForm>& x) {
  if (lambda.size() != x.size())
    throw UsageError("lex_spectrum: length mismatch");
  if (x.empty() || x[0].is_zero())
    throw UsageError("lex_spectrum: requires x_1 != 0");
  LinForm tr;
  for (size_t i = 0; i < x.size(); ++i) tr += x[i] * lambda[i];
  return {{tr, 1}, {LinForm{}, static_cast<long long>(x.size()) - 1}};
}

ThspReport verify_thsp(int n, const std::vector<uint64_t>& seeds) {
  if (n < 4 || n > 7) throw UsageError("verify_thsp: n outside [4, 7]");
  ThspReport rep;
  rep.n = n;
  auto fail = [&rep](const std::string& what) {
    if (rep.failure.empty()) rep.failure = what;
  };

  const Rational scalar = Rational(n) * Rational(factorial(n - 2));

  // (a) fix action is n(n-2)! z I, off-diagonal vanishing included
  const Matrix<LinForm> fa = specht_action(element_of(StatKind::FIX_Z, n));
  rep.fix_action_scalar = true;
  const LinForm nz = LinForm::variable(VarId::z(), scalar);
  for (size_t r = 0; r < fa.rows(); ++r)
    for (size_t c = 0; c < fa.cols(); ++c) {
      const LinForm expect = (r == c) ? nz : LinForm{};
      if (fa.at(r, c) != expect) rep.fix_action_scalar = false;
    }
  if (!rep.fix_action_scalar) fail("fix_action_scalar");

  // (b) inv action: rank <= 1 (all 2x2 minors vanish) and trace = g
  const Matrix<LinForm> ia = specht_action(element_of(StatKind::INV_Y, n));
  auto reg = VarRegistry::of(collect_vars(ia));
  rep.inv_action_rank1 = true;
  for (size_t r1 = 0; r1 < ia.rows() && rep.inv_action_rank1; ++r1)
    for (size_t r2 = r1 + 1; r2 < ia.rows() && rep.inv_action_rank1; ++r2)
      for (size_t c1 = 0; c1 < ia.cols() && rep.inv_action_rank1; ++c1)
        for (size_t c2 = c1 + 1; c2 < ia.cols(); ++c2) {
          const Poly minor =
              Poly::from_linform(ia.at(r1, c1), reg) * Poly::from_linform(ia.at(r2, c2), reg) -
              Poly::from_linform(ia.at(r1, c2), reg) * Poly::from_linform(ia.at(r2, c1), reg);
          if (!minor.is_zero()) {
            rep.inv_action_rank1 = false;
            break;
          }
        }
  if (!rep.inv_action_rank1) fail("inv_action_rank1");

  const LinForm g = leg_form(n);
  rep.inv_trace_is_leg = (ia.trace() == g);
  if (!rep.inv_trace_is_leg) fail("inv_trace_is_leg");

  // entry (j,i) = lambda_j * x_i, lambda_j = (n-2j+1)/2 (n-2)!
  rep.prinv_factorization = true;
  for (int j = 2; j <= n && rep.prinv_factorization; ++j) {
    const Rational lam =
        Rational(n - 2 * j + 1) / Rational(2) * Rational(factorial(n - 2));
    for (int i = 2; i <= n; ++i) {
      if (ia.at(static_cast<size_t>(j) - 2, static_cast<size_t>(i) - 2) !=
          prinv_column_form(n, i) * lam) {
        rep.prinv_factorization = false;
        break;
      }
    }
  }
  if (!rep.prinv_factorization) fail("prinv_factorization");

  // spectrum certification at seeded specializations
  const Matrix<LinForm> m =
      specht_action(add(element_of(StatKind::INV_Y, n), element_of(StatKind::FIX_Z, n)));
  const LinForm top = g + nz;  // (n-2)!(nz - sum (j-i) y_{i,j})
  const std::vector<LinForm> eigen = {top, nz};
  std::set<VarId> vars = collect_vars(m);
  for (const LinForm& f : eigen) f.collect_vars(vars);

  rep.multiplicities_ok = true;
  rep.diagonalizable = true;
  for (uint64_t seed : seeds) {
    const Assignment a = random_assignment(vars, seed, eigen);
    const Matrix<Rational> ma = specialize(m, a);
    const long long k_top = kernel_dim(shift_diagonal(ma, top.eval(a)));
    const long long k_scalar = kernel_dim(shift_diagonal(ma, nz.eval(a)));
    rep.kernel_dims_top.push_back(k_top);
    rep.kernel_dims_scalar.push_back(k_scalar);
    if (k_top != 1 || k_scalar != n - 2) rep.multiplicities_ok = false;
    if (k_top + k_scalar != n - 1) rep.diagonalizable = false;
  }
  if (!rep.multiplicities_ok) fail("multiplicities");
  if (!rep.diagonalizable) fail("diagonalizability");

  rep.pass = rep.fix_action_scalar && rep.inv_action_rank1 &&
             rep.inv_trace_is_leg && rep.prinv_factorization &&
             rep.multiplicities_ok && rep.diagonalizable;
  return rep;
}

}  // namespace permspec
