#include "permspec/assignment.hpp"

#include <random>
#include <vector>

#include "permspec/errors.hpp"

namespace permspec {

const Rational& Assignment::value_of(VarId v) const {
  auto it = values_.find(v);
  if (it == values_.end())
    throw UsageError("Assignment: no value for variable " + v.name());
  return it->second;
}

Assignment random_assignment(const std::set<VarId>& vars, uint64_t seed,
                             std::span<const LinForm> distinct, int retries) {
  std::mt19937_64 rng(seed);
  // Raw engine output: uniform_int_distribution is not portable across
  // standard library implementations, the engine sequence is.
  auto draw = [&rng]() {
    return static_cast<long long>(rng() % (1ull << 20)) + 1;
  };
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::map<VarId, Rational> values;
    for (VarId v : vars) values[v] = Rational(draw());
    Assignment a(std::move(values), seed);
    bool ok = true;
    std::vector<Rational> seen;
    seen.reserve(distinct.size());
    for (const LinForm& f : distinct) {
      Rational val = f.eval(a);
      for (const Rational& s : seen)
        if (s == val) {
          ok = false;
          break;
        }
      if (!ok) break;
      seen.push_back(std::move(val));
    }
    if (ok) return a;
  }
  throw SetupError("random_assignment: retry budget exhausted without a "
                   "collision-free assignment");
}

Assignment mif_assignment(int n) {
  std::map<VarId, Rational> values;
  for (int i = 1; i <= n - 1; ++i) values[VarId::x(i)] = Rational(i);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) values[VarId::y(i, j)] = Rational(1);
  values[VarId::z()] = Rational(1);
  return Assignment(std::move(values), 0);
}

}  // namespace permspec
