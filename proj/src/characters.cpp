#include "permspec/characters.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

#include "permspec/errors.hpp"

namespace permspec {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 1) throw UsageError("Partition: parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw UsageError("Partition: parts must be weakly decreasing");
  }
}

int Partition::sum() const {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

int Partition::fix() const {
  return static_cast<int>(std::count(parts.begin(), parts.end(), 1));
}

std::string Partition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts[i]);
  }
  return s + ")";
}

std::string Partition::label() const {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(parts[i]);
  }
  return s;
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(acc);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    acc.push_back(p);
    gen_partitions(remaining - p, p, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n) {
  if (n < 0 || n > 12) throw ResourceError("partitions: n outside [0, 12]");
  if (n == 0) return {Partition{}};
  std::vector<Partition> out;
  std::vector<int> acc;
  // Descending first parts produce reverse-lexicographic order directly.
  gen_partitions(n, n, acc, out);
  return out;
}

long long hook_dim(const Partition& lambda) {
  const int n = lambda.sum();
  const auto& p = lambda.parts;
  std::vector<int> conj(p.empty() ? 0 : static_cast<size_t>(p[0]), 0);
  for (int part : p)
    for (int c = 0; c < part; ++c) ++conj[static_cast<size_t>(c)];
  long long dim = 1;
  // n! / prod(hooks), interleaving to keep divisions exact at every step
  // is unnecessary: compute hook product then divide n! exactly.
  long long hooks = 1;
  for (size_t r = 0; r < p.size(); ++r)
    for (int c = 0; c < p[r]; ++c) {
      const int arm = p[r] - c - 1;
      const int leg = conj[static_cast<size_t>(c)] - static_cast<int>(r) - 1;
      hooks *= arm + leg + 1;
    }
  dim = factorial(n) / hooks;
  return dim;
}

long long centralizer_order(const Partition& mu) {
  std::map<int, int> mult;
  for (int part : mu.parts) ++mult[part];
  long long z = 1;
  for (auto [part, m] : mult) {
    for (int k = 0; k < m; ++k) z *= part;
    z *= factorial(m);
  }
  return z;
}

long long class_size(const Partition& mu) {
  return factorial(mu.sum()) / centralizer_order(mu);
}

namespace {

// Beta-set encoding: beta_i = lambda_i + (k - 1 - i) for k rows. Removing a
// border strip of length r means lowering one beta value by r onto a free
// slot; the sign is (-1)^(number of beta values crossed).
long long mn_rec(std::vector<int> lambda, std::vector<int> mu,
                 std::map<std::pair<std::vector<int>, std::vector<int>>,
                          long long>& memo) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  auto key = std::make_pair(lambda, mu);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  const int r = mu[0];
  std::vector<int> mu_rest(mu.begin() + 1, mu.end());

  const int k = static_cast<int>(lambda.size());
  std::vector<int> beta(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i)
    beta[static_cast<size_t>(i)] = lambda[static_cast<size_t>(i)] + (k - 1 - i);
  // beta is strictly decreasing

  long long total = 0;
  for (int i = 0; i < k; ++i) {
    const int b = beta[static_cast<size_t>(i)];
    const int nb = b - r;
    if (nb < 0) continue;
    bool occupied = false;
    int crossed = 0;
    for (int l = 0; l < k; ++l) {
      if (l == i) continue;
      const int v = beta[static_cast<size_t>(l)];
      if (v == nb) {
        occupied = true;
        break;
      }
      if (v > nb && v < b) ++crossed;
    }
    if (occupied) continue;
    std::vector<int> nbeta = beta;
    nbeta[static_cast<size_t>(i)] = nb;
    std::sort(nbeta.rbegin(), nbeta.rend());
    std::vector<int> nlambda;
    const int nk = static_cast<int>(nbeta.size());
    for (int l = 0; l < nk; ++l) {
      const int part = nbeta[static_cast<size_t>(l)] - (nk - 1 - l);
      if (part > 0) nlambda.push_back(part);
    }
    const long long sign = (crossed % 2 == 0) ? 1 : -1;
    total += sign * mn_rec(std::move(nlambda), mu_rest, memo);
  }
  memo[std::move(key)] = total;
  return total;
}

}  // namespace

long long mn_character(const Partition& lambda, const Partition& mu) {
  if (lambda.sum() != mu.sum())
    throw UsageError("mn_character: |lambda| != |mu|");
  static thread_local std::map<
      std::pair<std::vector<int>, std::vector<int>>, long long>
      memo;
  return mn_rec(lambda.parts, mu.parts, memo);
}

CharacterTable character_table(int n) {
  CharacterTable t;
  t.n = n;
  t.parts = partitions(n);
  const size_t k = t.parts.size();
  t.chi.assign(k, std::vector<long long>(k, 0));
  for (size_t l = 0; l < k; ++l)
    for (size_t m = 0; m < k; ++m)
      t.chi[l][m] = mn_character(t.parts[l], t.parts[m]);
  for (const Partition& p : t.parts) t.dims.push_back(hook_dim(p));
  for (const Partition& p : t.parts) t.sizes.push_back(class_size(p));
  return t;
}

void dump_character_table_csv(std::ostream& os, const CharacterTable& t) {
  os << "\"\"";
  for (const Partition& mu : t.parts) os << ",\"" << mu.label() << "\"";
  os << "\n";
  for (size_t l = 0; l < t.parts.size(); ++l) {
    os << "\"" << t.parts[l].label() << "\"";
    for (size_t m = 0; m < t.parts.size(); ++m) os << ",\"" << t.chi[l][m] << "\"";
    os << "\n";
  }
}

DichotomyResult character_sum_dichotomy(int n) {
  if (n < 4 || n > 8)
    throw UsageError("character_sum_dichotomy: n outside [4, 8]");
  DichotomyResult r;
  r.n = n;
  const auto parts = partitions(n);
  for (const Partition& lambda : parts) {
    long long s = 0;
    for (const Partition& mu : parts)
      s += static_cast<long long>(mu.fix()) * class_size(mu) *
           mn_character(lambda, mu);
    r.sums[lambda] = s;
    if (s != 0) r.nonzero.push_back(lambda);
  }
  r.two_nonzero = (r.nonzero.size() == 2);
  const long long nf = factorial(n);
  r.values_are_n_factorial =
      r.two_nonzero && r.sums[r.nonzero[0]] == nf && r.sums[r.nonzero[1]] == nf;
  if (r.two_nonzero) {
    long long d0 = hook_dim(r.nonzero[0]);
    long long d1 = hook_dim(r.nonzero[1]);
    if (d0 > d1) std::swap(d0, d1);
    r.dims_are_1_and_n_minus_1 = (d0 == 1 && d1 == n - 1);
  }
  r.pass = r.two_nonzero && r.values_are_n_factorial && r.dims_are_1_and_n_minus_1;
  return r;
}

}  // namespace permspec
