#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>

#include "permspec/linform.hpp"
#include "permspec/rational.hpp"
#include "permspec/varid.hpp"

namespace permspec {

// Rational value for every variable of a target form or matrix, plus the
// seed that produced it (reproducibility token).
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::map<VarId, Rational> values, uint64_t seed)
      : values_(std::move(values)), seed_(seed) {}

  const Rational& value_of(VarId v) const;
  bool has(VarId v) const { return values_.count(v) != 0; }
  const std::map<VarId, Rational>& values() const { return values_; }
  uint64_t seed() const { return seed_; }

  Assignment& set(VarId v, Rational r) {
    values_[v] = std::move(r);
    return *this;
  }

 private:
  std::map<VarId, Rational> values_;
  uint64_t seed_ = 0;
};

// Deterministic per seed: each variable gets an integer uniform in
// [1, 2^20] drawn from a seeded mt19937_64 (raw engine output, so the
// sequence is identical across platforms). If `distinct` forms are given,
// resamples until they evaluate to pairwise different values; exhausting
// the retry budget raises SetupError.
Assignment random_assignment(const std::set<VarId>& vars, uint64_t seed,
                             std::span<const LinForm> distinct = {},
                             int retries = 64);

// x_i = i, y_{i,j} = 1, z = 1: the specialization taking multinomial
// statistics to maj + inv + fix.
Assignment mif_assignment(int n);

}  // namespace permspec
