#pragma once

#include <map>
#include <string>
#include <vector>

#include "permspec/rational.hpp"

namespace permspec {

// Integer partition: weakly decreasing positive parts.
struct Partition {
  std::vector<int> parts;

  explicit Partition(std::vector<int> p);
  Partition() = default;

  int sum() const;
  int num_parts() const { return static_cast<int>(parts.size()); }
  // number of parts equal to 1
  int fix() const;

  std::string str() const;    // "(3,1)"
  std::string label() const;  // "3+1"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts <=> b.parts;
  }
};

// All partitions of n in reverse-lexicographic order, (n) first.
std::vector<Partition> partitions(int n);

// Specht module dimension by the hook length formula.
long long hook_dim(const Partition& lambda);

// z_mu = prod_i i^{m_i} m_i!
long long centralizer_order(const Partition& mu);

// Conjugacy class size n!/z_mu.
long long class_size(const Partition& mu);

// Irreducible character chi_lambda^mu by the Murnaghan-Nakayama rule
// (recursive border-strip removal with sign (-1)^(height-1)), memoized.
long long mn_character(const Partition& lambda, const Partition& mu);

struct CharacterTable {
  int n;
  std::vector<Partition> parts;             // row = lambda, column = mu
  std::vector<std::vector<long long>> chi;  // chi[lambda][mu]
  std::vector<long long> dims;              // d_lambda per row
  std::vector<long long> sizes;             // class size per column
};

CharacterTable character_table(int n);

void dump_character_table_csv(std::ostream& os, const CharacterTable& t);

// S(lambda) = sum_mu fix(mu) * #class(mu) * chi_lambda^mu for every lambda.
struct DichotomyResult {
  int n;
  std::map<Partition, long long> sums;    // all lambda
  std::vector<Partition> nonzero;         // lambda with S != 0
  bool two_nonzero = false;               // exactly two nonzero
  bool values_are_n_factorial = false;    // both equal n!
  bool dims_are_1_and_n_minus_1 = false;  // dimensions {1, n-1}
  bool pass = false;
};

DichotomyResult character_sum_dichotomy(int n);

}  // namespace permspec
