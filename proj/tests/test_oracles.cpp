#include <doctest.h>

#include <map>

#include "permspec/errata.hpp"
#include "permspec/oracles.hpp"
#include "permspec/stats.hpp"

using namespace permspec;

TEST_CASE("pairwise fixed-point sums") {
  for (int n = 4; n <= 5; ++n) {
    const auto checks = leij_check(n);
    // every claim passes and, per item, every (i,j) gives the same value
    std::map<int, std::string> by_item;
    for (const LemmaCheck& c : checks) {
      CHECK(c.pass);
      auto [it, inserted] = by_item.try_emplace(c.item, c.brute_force);
      if (!inserted) CHECK(it->second == c.brute_force);
    }
  }
  // spot values at n = 4: 6, 6, 2, 2
  const auto c4 = leij_check(4);
  CHECK(c4[0].brute_force == "6");
  CHECK(c4[1].brute_force == "6");
  CHECK(c4[2].brute_force == "2");
  CHECK(c4[3].brute_force == "2");
}

TEST_CASE("the four pairwise sets partition the sigma(i) in {i,j} slice") {
  const int n = 4;
  const auto perms = enumerate_group(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      long long c1 = 0, c2 = 0, c3 = 0, c4 = 0, slice = 0;
      for (const Permutation& s : perms) {
        if (s(i) == i && s(j) == j) ++c1;
        if (s(i) == i && s(j) != j) ++c2;
        if (s(i) == j && s(j) == i) ++c3;
        if (s(i) == j && s(j) != i) ++c4;
        if (s(i) == i || s(i) == j) ++slice;
      }
      CHECK(c1 + c2 + c3 + c4 == slice);
    }
}

TEST_CASE("triple fixed-point sums") {
  for (int n = 4; n <= 5; ++n) {
    std::map<int, std::string> by_item;
    for (const LemmaCheck& c : leijk_check(n)) {
      CHECK(c.pass);
      auto [it, inserted] = by_item.try_emplace(c.item, c.brute_force);
      if (!inserted) CHECK(it->second == c.brute_force);
    }
  }
  const auto c4 = leijk_check(4);
  CHECK(c4[0].brute_force == "3");   // item 1
  CHECK(c4[2].brute_force == "9");   // item 3
  const auto c5 = leijk_check(5);
  CHECK(c5[4].brute_force == "14");  // item 5
}

TEST_CASE("fix convolution identity for every tau") {
  const IdentitySuiteReport r4 = prfix_check(4);
  CHECK(r4.pass);
  CHECK(r4.instances == 24);
  const IdentitySuiteReport r5 = prfix_check(5);
  CHECK(r5.pass);
  CHECK(r5.instances == 120);

  // direct witness: tau a transposition at n = 4 gives 48 - 8*2 = 32
  const auto perms = enumerate_group(4);
  const Permutation tau({2, 1, 3, 4});
  long long lhs = 0;
  for (const Permutation& s : perms)
    lhs += static_cast<long long>(fix_count(s)) *
           fix_count(compose(inverse(s), tau));
  CHECK(lhs == 32);
}

TEST_CASE("one-step transposition recurrences") {
  const IdentitySuiteReport r4 = transposition_recurrence_check(4);
  CHECK(r4.pass);
  CHECK(r4.instances > 0);
  CHECK(transposition_recurrence_check(5).pass);

  // tau = iota, (i j) = (1 2): both sides by direct enumeration
  const auto perms = enumerate_group(4);
  const Permutation tau12({2, 1, 3, 4});
  long long lhs = 0, rhs = 0;
  for (const Permutation& s : perms) {
    lhs += static_cast<long long>(fix_count(s)) *
           fix_count(compose(inverse(s), tau12));
    const long long f = fix_count(s);
    rhs += f * f;
  }
  rhs -= 4 * factorial(2) * 2;
  CHECK(lhs == rhs);
}

TEST_CASE("sum of squared fixed-point counts") {
  CHECK(sum_fix_sq(1) == 1);
  CHECK(sum_fix_sq(4) == 48);
  CHECK(sum_fix_sq(5) == 240);
  for (int n = 2; n <= 6; ++n) CHECK(sum_fix_sq(n) == 2 * factorial(n));
}

TEST_CASE("the all-equal-coefficients product") {
  const LambdaReport r4 = lambda_check(4);
  CHECK(r4.pass);
  CHECK(r4.coeffs_all_equal);
  CHECK(r4.lambda == "16*z^2");

  const LambdaReport r5 = lambda_check(5);
  CHECK(r5.pass);
  CHECK(r5.lambda == "90*z^2");
}

TEST_CASE("errata ledger at nmax = 4") {
  const ErrataLedger ledger = errata_ledger(4);
  CHECK(ledger.no_new_discrepancy);
  CHECK(ledger.failures.empty());
  CHECK(ledger.discrepancy_count() == 4);
  REQUIRE(ledger.entries.size() == 6);

  std::map<std::string, std::string> kind_of;
  for (const ErrataEntry& e : ledger.entries) {
    kind_of[e.tag] = e.kind;
    CHECK(!e.witness.empty());
    CHECK(e.witness_n >= 3);
  }
  CHECK(kind_of.at("inv_definition_condition") == "discrepancy");
  CHECK(kind_of.at("sum_fix_squared_remark") == "discrepancy");
  CHECK(kind_of.at("lambda_extra_factorial") == "discrepancy");
  CHECK(kind_of.at("mif_third_eigenvalue") == "discrepancy");
  CHECK(kind_of.at("golden_n3_formatting") == "typography");
  CHECK(kind_of.at("dichotomy_trivial_label") == "convention");

  // the recorded values
  for (const ErrataEntry& e : ledger.entries) {
    if (e.tag == "sum_fix_squared_remark") {
      CHECK(e.printed == "416");
      CHECK(e.computed == "48");
    }
    if (e.tag == "mif_third_eigenvalue") {
      CHECK(e.printed == "-8");
      CHECK(e.computed == "-16");
    }
  }
}
