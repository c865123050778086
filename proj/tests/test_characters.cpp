#include <doctest.h>

#include <map>
#include <sstream>

#include "permspec/characters.hpp"
#include "permspec/groupalg.hpp"
#include "permspec/specht.hpp"

using namespace permspec;

namespace {

// independent p(n) oracle by dynamic programming
long long partition_count(int n) {
  std::vector<std::vector<long long>> p(
      static_cast<size_t>(n) + 1, std::vector<long long>(static_cast<size_t>(n) + 1, 0));
  for (int k = 0; k <= n; ++k) p[0][static_cast<size_t>(k)] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= n; ++k) {
      p[static_cast<size_t>(m)][static_cast<size_t>(k)] =
          p[static_cast<size_t>(m)][static_cast<size_t>(k - 1)] +
          (m >= k ? p[static_cast<size_t>(m - k)][static_cast<size_t>(k)] : 0);
    }
  return p[static_cast<size_t>(n)][static_cast<size_t>(n)];
}

}  // namespace

TEST_CASE("partition enumeration") {
  const auto p4 = partitions(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0].parts == std::vector<int>{4});
  CHECK(p4[1].parts == std::vector<int>{3, 1});
  CHECK(p4[2].parts == std::vector<int>{2, 2});
  CHECK(p4[3].parts == std::vector<int>{2, 1, 1});
  CHECK(p4[4].parts == std::vector<int>{1, 1, 1, 1});

  CHECK(partitions(1).size() == 1);
  CHECK(partitions(7).size() == 15);
  for (int n = 1; n <= 10; ++n)
    CHECK(partitions(n).size() == static_cast<size_t>(partition_count(n)));

  CHECK_THROWS_AS(Partition({1, 2}), UsageError);
  CHECK_THROWS_AS(Partition({0}), UsageError);
  CHECK(Partition({3, 1}).str() == "(3,1)");
  CHECK(Partition({3, 1}).label() == "3+1");
}

TEST_CASE("hook length dimensions") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(hook_dim(Partition(std::vector<int>{n})) == 1);
    if (n >= 2) {
      CHECK(hook_dim(Partition({n - 1, 1})) == n - 1);
      CHECK(hook_dim(Partition(std::vector<int>(static_cast<size_t>(n), 1))) == 1);
    }
    long long sumsq = 0;
    for (const Partition& p : partitions(n)) {
      const long long d = hook_dim(p);
      sumsq += d * d;
    }
    CHECK(sumsq == factorial(n));
  }
}

TEST_CASE("class sizes") {
  CHECK(class_size(Partition({1, 1, 1, 1})) == 1);
  CHECK(class_size(Partition({2, 1, 1})) == 6);  // transpositions in S_4
  for (int n = 1; n <= 7; ++n) {
    long long total = 0;
    for (const Partition& mu : partitions(n)) total += class_size(mu);
    CHECK(total == factorial(n));
  }
  // against enumeration
  std::map<std::vector<int>, long long> counts;
  for (const Permutation& s : enumerate_group(5)) ++counts[cycle_type_parts(s)];
  for (const Partition& mu : partitions(5))
    CHECK(class_size(mu) == counts[mu.parts]);
}

TEST_CASE("trivial and sign rows of the character table") {
  for (int n = 2; n <= 7; ++n) {
    const Partition triv(std::vector<int>{n});
    const Partition sign(std::vector<int>(static_cast<size_t>(n), 1));
    for (const Partition& mu : partitions(n)) {
      CHECK(mn_character(triv, mu) == 1);
      // sign of a class: (-1)^(n - number of parts)
      const long long expect = ((n - mu.num_parts()) % 2 == 0) ? 1 : -1;
      CHECK(mn_character(sign, mu) == expect);
    }
  }
}

TEST_CASE("standard representation character is fix - 1") {
  for (int n = 4; n <= 5; ++n) {
    const Partition std_rep({n - 1, 1});
    for (const Partition& mu : partitions(n))
      CHECK(mn_character(std_rep, mu) == mu.fix() - 1);
  }
}

TEST_CASE("standard character matches the specht action trace") {
  // trace of the action of delta_sigma on S^(n-1,1) is an independent route
  for (int n = 4; n <= 5; ++n) {
    std::map<std::vector<int>, Permutation> reps;
    for (const Permutation& s : enumerate_group(n))
      reps.try_emplace(cycle_type_parts(s), s);
    for (const auto& [type, rep] : reps) {
      const Matrix<LinForm> action = specht_action(delta_element(rep));
      const LinForm tr = action.trace();
      CHECK(tr.is_constant());
      CHECK(tr.constant() ==
            Rational(mn_character(Partition({n - 1, 1}), Partition(type))));
    }
  }
}

TEST_CASE("character table structure at n = 5") {
  const CharacterTable t = character_table(5);
  const size_t k = t.parts.size();
  // first column (mu = (1,...,1)) holds the dimensions
  for (size_t l = 0; l < k; ++l) CHECK(t.chi[l][k - 1] == t.dims[l]);
  // column orthogonality
  for (size_t mu = 0; mu < k; ++mu)
    for (size_t nu = 0; nu < k; ++nu) {
      long long dot = 0;
      for (size_t l = 0; l < k; ++l) dot += t.chi[l][mu] * t.chi[l][nu];
      CHECK(dot == (mu == nu ? centralizer_order(t.parts[mu]) : 0));
    }
}

TEST_CASE("character sum dichotomy") {
  for (int n = 4; n <= 6; ++n) {
    const DichotomyResult d = character_sum_dichotomy(n);
    CHECK(d.pass);
    REQUIRE(d.nonzero.size() == 2);
    CHECK(d.sums.at(d.nonzero[0]) == factorial(n));
    CHECK(d.sums.at(d.nonzero[1]) == factorial(n));
    // the two nonzero rows are the trivial and standard partitions
    CHECK(d.nonzero[0] == Partition(std::vector<int>{n}));
    CHECK(d.nonzero[1] == Partition({n - 1, 1}));
  }
  const DichotomyResult d4 = character_sum_dichotomy(4);
  CHECK(d4.sums.at(Partition({2, 2})) == 0);
  CHECK(d4.sums.at(Partition({1, 1, 1, 1})) == 0);
}

TEST_CASE("character table csv") {
  const CharacterTable t = character_table(4);
  std::ostringstream os;
  dump_character_table_csv(os, t);
  const std::string text = os.str();
  CHECK(text.find("\"3+1\"") != std::string::npos);
  CHECK(text.find("\"1+1+1+1\"") != std::string::npos);
}
