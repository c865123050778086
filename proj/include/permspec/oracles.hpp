#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "permspec/linform.hpp"
#include "permspec/perm.hpp"

namespace permspec {

// One brute-force-vs-closed-form comparison. Emitted as a JSON line by the
// lemma suites; verdict PASS iff the values are exactly equal.
struct LemmaCheck {
  std::string lemma;
  int n = 0;
  int item = 0;            // which numbered claim, 0 when not applicable
  std::vector<int> params; // (i), (i,j) or (i,j,k) as applicable
  std::string closed_form;
  std::string brute_force;
  bool pass = false;

  nlohmann::json to_json() const;
};

// Constrained fixed-point sums over pairs (i, j), four claims each:
// sigma(i)=i & sigma(j)=j; sigma(i)=i & sigma(j)!=j; sigma(i)=j &
// sigma(j)=i; sigma(i)=j & sigma(j)!=i. Closed forms 3(n-2)!,
// (2n-5)(n-2)!, (n-2)!, (n-3)(n-2)!.
std::vector<LemmaCheck> leij_check(int n);

// Constrained fixed-point sums over distinct triples (i, j, k), six claims.
std::vector<LemmaCheck> leijk_check(int n);

// Constrained inv_y sums over (i, j) in ([n] \ {1})^2, four claims,
// compared against their closed linear forms.
std::vector<LemmaCheck> leyij_check(int n);

// Symbolic identity between the defining sum of g and
// -(n-2)! sum (j-i) y_{i,j}.
LemmaCheck leg_check(int n);

struct IdentitySuiteReport {
  std::string name;
  int n = 0;
  long long instances = 0;
  bool pass = false;
  std::string failure;  // witness of the first failing instance

  nlohmann::json to_json() const;
};

// For every tau: sum_sigma fix(sigma) fix(sigma^-1 tau) =
// sum fix^2 - n(n-2)!(fix(iota) - fix(tau)). The z^2 grading is carried
// symbolically for n <= 5, scalar values beyond.
IdentitySuiteReport prfix_check(int n);

// The one-step recurrences behind the telescoping argument: for every tau
// and admissible transposition (both endpoints fixed, or first endpoint in
// a cycle and second fixed), the fix-convolution changes by
// n(n-2)!(fix(tau) - fix(tau (i j))).
IdentitySuiteReport transposition_recurrence_check(int n);

// sum over S_n of fix(sigma)^2, by enumeration.
long long sum_fix_sq(int n);

struct LambdaReport {
  int n = 0;
  bool coeffs_all_equal = false;  // f_z*(f_z - n(n-2)! z iota) has all
                                  // group-algebra coefficients equal
  std::string lambda;             // the common coefficient
  bool lambda_reconciles = false; // n! * Lambda = n!z * n(n-2)(n-2)!z
  bool iota_crosscheck = false;   // Lambda + n^2 (n-2)! z^2 = (sum fix^2) z^2
  bool pass = false;

  nlohmann::json to_json() const;
};

LambdaReport lambda_check(int n);

}  // namespace permspec
