#include "permspec/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "permspec/config.hpp"
#include "permspec/rational.hpp"

namespace permspec {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = degree();
  if (n < 1) throw UsageError("Permutation: degree must be >= 1");
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  for (int v : word_) {
    if (v < 1 || v > n || seen[static_cast<size_t>(v)])
      throw UsageError("Permutation: word is not a bijection on [n]");
    seen[static_cast<size_t>(v)] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> w;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      w.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      throw UsageError("Permutation: cannot parse '" + text + "'");
    }
  }
  return Permutation(std::move(w));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= degree(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

std::string Permutation::str() const {
  std::string s;
  for (size_t i = 0; i < word_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(word_[i]);
  }
  return s;
}

Permutation compose(const Permutation& s, const Permutation& t) {
  if (s.degree() != t.degree())
    throw UsageError("compose: degree mismatch");
  std::vector<int> w(static_cast<size_t>(s.degree()));
  for (int i = 1; i <= s.degree(); ++i) w[static_cast<size_t>(i) - 1] = s(t(i));
  return Permutation(std::move(w));
}

Permutation inverse(const Permutation& s) {
  std::vector<int> w(static_cast<size_t>(s.degree()));
  for (int i = 1; i <= s.degree(); ++i) w[static_cast<size_t>(s(i)) - 1] = i;
  return Permutation(std::move(w));
}

std::vector<Permutation> enumerate_group(int n) {
  if (n < 1 || n > default_caps().max_enum_degree)
    throw ResourceError("enumerate_group: degree " + std::to_string(n) +
                        " outside supported range [1, " +
                        std::to_string(default_caps().max_enum_degree) + "]");
  std::vector<Permutation> out;
  out.reserve(static_cast<size_t>(factorial(n)));
  std::vector<int> w(static_cast<size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

long long rank_of(const Permutation& s) {
  const int n = s.degree();
  long long r = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j <= n; ++j)
      if (s(j) < s(i)) ++smaller;
    r += smaller * factorial(n - i);
  }
  return r;
}

Permutation unrank(long long r, int n) {
  if (n < 1 || r < 0 || r >= factorial(n))
    throw UsageError("unrank: rank out of range");
  std::vector<int> pool(static_cast<size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> w;
  w.reserve(static_cast<size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    const long long f = factorial(i);
    const auto idx = static_cast<size_t>(r / f);
    r %= f;
    w.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(w));
}

std::vector<int> fixed_points(const Permutation& s) {
  std::vector<int> out;
  for (int i = 1; i <= s.degree(); ++i)
    if (s(i) == i) out.push_back(i);
  return out;
}

int fix_count(const Permutation& s) {
  int c = 0;
  for (int i = 1; i <= s.degree(); ++i)
    if (s(i) == i) ++c;
  return c;
}

std::string Cycle::str() const {
  std::string s = "(";
  for (size_t i = 0; i < support.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(support[i]);
  }
  return s + ")";
}

std::vector<Cycle> cycles(const Permutation& s) {
  const int n = s.degree();
  std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
  std::vector<Cycle> out;
  for (int i = 1; i <= n; ++i) {
    if (seen[static_cast<size_t>(i)] || s(i) == i) continue;
    Cycle c;
    int j = i;
    do {
      seen[static_cast<size_t>(j)] = 1;
      c.support.push_back(j);
      j = s(j);
    } while (j != i);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<int> cycle_type_parts(const Permutation& s) {
  std::vector<int> parts;
  for (const Cycle& c : cycles(s)) parts.push_back(static_cast<int>(c.support.size()));
  const int fixes = fix_count(s);
  for (int i = 0; i < fixes; ++i) parts.push_back(1);
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

Permutation right_multiply_transposition(const Permutation& t, int i, int j) {
  std::vector<int> w = t.word();
  std::swap(w[static_cast<size_t>(i) - 1], w[static_cast<size_t>(j) - 1]);
  return Permutation(std::move(w));
}

std::vector<Cycle> fixdisc_transposition_chain(const Permutation& t) {
  // Each cycle (c1 c2 ... cm) factors as (c1 c2)(c2 c3)...(c_{m-1} c_m):
  // the first step joins two fixed points, every later step absorbs the
  // still-fixed next element into the growing cycle.
  std::vector<Cycle> chain;
  for (const Cycle& c : cycles(t)) {
    for (size_t l = 0; l + 1 < c.support.size(); ++l)
      chain.push_back(Cycle{{c.support[l], c.support[l + 1]}});
  }
  return chain;
}

}  // namespace permspec
