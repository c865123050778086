#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "permspec/errors.hpp"

namespace permspec {

// Permutation of [n] in one-line notation: word[i-1] = sigma(i), 1-based values.
// Immutable after construction.
class Permutation {
 public:
  explicit Permutation(std::vector<int> word);
  static Permutation identity(int n);
  // Parses comma-separated one-line notation, e.g. "2,1,4,3".
  static Permutation parse(const std::string& text);

  int degree() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[static_cast<size_t>(i) - 1]; }
  const std::vector<int>& word() const { return word_; }
  bool is_identity() const;

  std::string str() const;  // "2,1,4,3"

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.word_ <=> b.word_;
  }

 private:
  std::vector<int> word_;
};

// Composition applies right factor first: (s*t)(i) = s(t(i)).
Permutation compose(const Permutation& s, const Permutation& t);
Permutation inverse(const Permutation& s);

// All n! permutations in lexicographic order of one-line words; the position
// in this sequence is the canonical rank used for matrix rows/columns.
std::vector<Permutation> enumerate_group(int n);

// Lexicographic rank/unrank (factorial number system); consistent with
// enumerate_group ordering.
long long rank_of(const Permutation& s);
Permutation unrank(long long r, int n);

std::vector<int> fixed_points(const Permutation& s);
int fix_count(const Permutation& s);

// Cycle of length >= 2; support lists the traversal order (c1 c2 ... ck)
// meaning the permutation maps c1->c2->...->ck->c1. Length-2 cycles double
// as transpositions.
struct Cycle {
  std::vector<int> support;
  std::string str() const;
};

// Nontrivial cycles of s, each starting at its smallest element, sorted by
// that element. Fixed points are omitted.
std::vector<Cycle> cycles(const Permutation& s);

// Weakly decreasing cycle type including fixed points as parts equal to 1.
std::vector<int> cycle_type_parts(const Permutation& s);

// Transposition chain (i1 j1)...(ik jk) whose left-to-right product is t,
// built so that for every prefix product tau_{l-1}: either both i_l and j_l
// are fixed by tau_{l-1}, or i_l is not fixed and j_l is fixed. The pair
// order inside each transposition matters for that predicate. Identity maps
// to the empty chain.
std::vector<Cycle> fixdisc_transposition_chain(const Permutation& t);

// Applies t * (i j), i.e. the transposition acts first.
Permutation right_multiply_transposition(const Permutation& t, int i, int j);

}  // namespace permspec
