#include "permspec/stats.hpp"

namespace permspec {

std::string stat_kind_name(StatKind kind) {
  switch (kind) {
    case StatKind::DES_X: return "des_x";
    case StatKind::INV_Y: return "inv_y";
    case StatKind::FIX_Z: return "fix_z";
    case StatKind::MFIX: return "mfix";
    case StatKind::DES_X_PLUS_INV_Y_PLUS_FIX_Z: return "des_x+inv_y+fix_z";
    case StatKind::INV_Y_PLUS_FIX_Z: return "inv_y+fix_z";
    case StatKind::MAJ_PLUS_INV_PLUS_FIX: return "maj+inv+fix";
  }
  return "?";
}

std::vector<int> des_set(const Permutation& s) {
  std::vector<int> out;
  for (int i = 1; i <= s.degree() - 1; ++i)
    if (s(i) > s(i + 1)) out.push_back(i);
  return out;
}

std::vector<std::pair<int, int>> inv_set(const Permutation& s) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= s.degree(); ++i)
    for (int j = i + 1; j <= s.degree(); ++j)
      if (s(i) > s(j)) out.emplace_back(i, j);
  return out;
}

long long maj_stat(const Permutation& s) {
  long long m = 0;
  for (int i : des_set(s)) m += i;
  return m;
}

long long inv_stat(const Permutation& s) {
  return static_cast<long long>(inv_set(s).size());
}

LinForm stat_value(StatKind kind, const Permutation& s) {
  switch (kind) {
    case StatKind::DES_X: {
      LinForm f;
      for (int i : des_set(s)) f += LinForm::variable(VarId::x(i));
      return f;
    }
    case StatKind::INV_Y: {
      LinForm f;
      for (auto [i, j] : inv_set(s)) f += LinForm::variable(VarId::y(i, j));
      return f;
    }
    case StatKind::FIX_Z:
      return LinForm::variable(VarId::z(), Rational(fix_count(s)));
    case StatKind::MFIX: {
      LinForm f;
      for (int i : fixed_points(s)) f += LinForm::variable(VarId::zi(i));
      return f;
    }
    case StatKind::DES_X_PLUS_INV_Y_PLUS_FIX_Z:
      return stat_value(StatKind::DES_X, s) + stat_value(StatKind::INV_Y, s) +
             stat_value(StatKind::FIX_Z, s);
    case StatKind::INV_Y_PLUS_FIX_Z:
      return stat_value(StatKind::INV_Y, s) + stat_value(StatKind::FIX_Z, s);
    case StatKind::MAJ_PLUS_INV_PLUS_FIX:
      return LinForm(
          Rational(maj_stat(s) + inv_stat(s) + fix_count(s)));
  }
  throw InternalError("stat_value: unhandled kind");
}

LinForm stat_total(StatKind kind, int n) {
  LinForm total;
  for (const Permutation& s : enumerate_group(n)) total += stat_value(kind, s);
  return total;
}

std::set<VarId> stat_vars(StatKind kind, int n) {
  std::set<VarId> vars;
  switch (kind) {
    case StatKind::DES_X:
      for (int i = 1; i <= n - 1; ++i) vars.insert(VarId::x(i));
      break;
    case StatKind::INV_Y:
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) vars.insert(VarId::y(i, j));
      break;
    case StatKind::FIX_Z:
      vars.insert(VarId::z());
      break;
    case StatKind::MFIX:
      for (int i = 1; i <= n; ++i) vars.insert(VarId::zi(i));
      break;
    case StatKind::DES_X_PLUS_INV_Y_PLUS_FIX_Z: {
      auto a = stat_vars(StatKind::DES_X, n);
      auto b = stat_vars(StatKind::INV_Y, n);
      vars.insert(a.begin(), a.end());
      vars.insert(b.begin(), b.end());
      vars.insert(VarId::z());
      break;
    }
    case StatKind::INV_Y_PLUS_FIX_Z: {
      auto b = stat_vars(StatKind::INV_Y, n);
      vars.insert(b.begin(), b.end());
      vars.insert(VarId::z());
      break;
    }
    case StatKind::MAJ_PLUS_INV_PLUS_FIX:
      break;  // scalar statistic, no variables
  }
  return vars;
}

}  // namespace permspec
