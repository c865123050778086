#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permspec/groupalg.hpp"
#include "permspec/linform.hpp"
#include "permspec/matrix.hpp"

namespace permspec {

// The standard (n-1)-dimensional Specht module S^(n-1,1), with basis
// v_i = e_1 - e_i for i in [n] \ {1} inside the sum-zero subspace of the
// natural permutation module.

// Matrix of a group-algebra element acting on that basis: column i holds
// the v-coordinates of (element) * v_{i+2}, row j the coefficient of
// v_{j+2}. A permutation acts by sigma * e_k = e_{sigma(k)}; coordinates
// re-enter the v-basis through the sum-zero relation eliminating e_1.
Matrix<LinForm> specht_action(const GroupAlgebraElement<LinForm>& e);
Matrix<Poly> specht_action(const GroupAlgebraElement<Poly>& e);

// Brute-force sum of inv_y over a constrained permutation set, for
// comparison against the closed forms below. `which` selects the
// constraint: 1: sigma(1)=1, sigma(i)=j; 2: sigma(1)=j, sigma(i)=1;
// 3: sigma(1)!=1, sigma(i)=j; 4: sigma(1)=j, sigma(i)!=1.
LinForm leyij_sum_bruteforce(int n, int i, int j, int which);

// The corresponding closed forms.
LinForm leyij_sum_closed(int n, int i, int j, int which);

// g built from its defining sum over i in [n] \ {1} with coefficient
// (n-2i+1)/2 * (n-2)!; checked symbolically against the closed form
// -(n-2)! * sum_{i<j} (j-i) y_{i,j}, which is returned.
LinForm leg_form(int n);

// The bracketed form multiplying (n-2j+1)/2 (n-2)! in the row-j entries of
// the inv_y action: 2y_{1,i} + sum y_{1,m} + sum y_{l,i} - sum y_{i,m}.
LinForm prinv_column_form(int n, int i);

// Spectrum of the rank-<=1 matrix X = (lambda_i x_j): trace with
// multiplicity 1 and 0 with multiplicity n-1. Requires x_1 != 0.
struct SpectrumPair {
  LinForm value;
  long long multiplicity;
};
std::vector<SpectrumPair> lex_spectrum(const std::vector<Rational>& lambda,
                                       const std::vector<LinForm>& x);

struct ThspReport {
  int n = 0;
  bool fix_action_scalar = false;   // action of f_z equals n(n-2)! z I
  bool inv_action_rank1 = false;    // all 2x2 minors of inv_y action vanish
  bool inv_trace_is_leg = false;    // trace equals the g form
  bool prinv_factorization = false; // entry (j,i) = lambda_j * x_i
  std::vector<long long> kernel_dims_top;     // per seed, expect 1
  std::vector<long long> kernel_dims_scalar;  // per seed, expect n-2
  bool multiplicities_ok = false;
  bool diagonalizable = false;  // kernel dims sum to n-1 at every seed
  bool pass = false;
  std::string failure;  // name of the first failing check plus a witness
};

// Certifies the spectrum of the Specht action of i_y + f_z against the
// predicted eigenpairs, at the given seeds.
ThspReport verify_thsp(int n, const std::vector<uint64_t>& seeds = {1, 2, 3});

}  // namespace permspec
