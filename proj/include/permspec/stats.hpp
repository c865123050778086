#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "permspec/linform.hpp"
#include "permspec/perm.hpp"

namespace permspec {

// Which multinomial statistic a value, group-algebra element, or regular
// matrix is built from. MFIX is the per-position fixed-point refinement
// used only by the counting oracle; MAJ_PLUS_INV_PLUS_FIX is the scalar
// maj + inv + fix specialization.
enum class StatKind {
  DES_X,
  INV_Y,
  FIX_Z,
  MFIX,
  DES_X_PLUS_INV_Y_PLUS_FIX_Z,
  INV_Y_PLUS_FIX_Z,
  MAJ_PLUS_INV_PLUS_FIX,
};

std::string stat_kind_name(StatKind kind);

// {i in [n-1] : s(i) > s(i+1)}
std::vector<int> des_set(const Permutation& s);

// {(i,j) : i < j, s(i) > s(j)}
std::vector<std::pair<int, int>> inv_set(const Permutation& s);

long long maj_stat(const Permutation& s);
long long inv_stat(const Permutation& s);

// The statistic as an exact linear form; composite kinds are the sums of
// their components, MAJ_PLUS_INV_PLUS_FIX is a constant form.
LinForm stat_value(StatKind kind, const Permutation& s);

// Sum of stat_value over all of S_n.
LinForm stat_total(StatKind kind, int n);

std::set<VarId> stat_vars(StatKind kind, int n);

}  // namespace permspec
