#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "permspec/assignment.hpp"
#include "permspec/linform.hpp"
#include "permspec/matrix.hpp"
#include "permspec/poly.hpp"

namespace permspec {

// Matrices with a registered predicted spectrum. F, IF, DIF, MIF are the
// n! x n! regular representations of fix_z, inv_y+fix_z, des_x+inv_y+fix_z
// and maj+inv+fix; SPECHT_IF is the (n-1) x (n-1) standard-module action
// of inv_y + fix_z.
enum class MatrixKind { F, IF, DIF, MIF, SPECHT_IF };

std::string matrix_kind_name(MatrixKind kind);
MatrixKind matrix_kind_from_name(const std::string& name);

struct EigenPair {
  LinForm value;
  long long multiplicity;
};

// Predicted spectrum: eigenvalue forms with multiplicities, the constant
// row-sum eigenvalue first whenever the matrix has one.
struct SpectrumSpec {
  MatrixKind kind;
  int n;
  std::vector<EigenPair> eigenpairs;
  std::string provenance;

  long long dimension() const;
  std::vector<LinForm> eigenvalues() const;
};

// The registered prediction for (kind, n). F/DIF/MIF/SPECHT_IF need n >= 4;
// IF additionally has the hand-checked lists for n = 1, 2, 3.
SpectrumSpec predicted_spectrum(MatrixKind kind, int n);

struct EigenCertification {
  LinForm value;
  long long multiplicity = 0;
  std::vector<long long> kernel_dims;  // one per seed
  bool ok = false;
};

struct CertificationReport {
  SpectrumSpec spec;
  std::vector<uint64_t> seeds;
  std::vector<Assignment> assignments;
  std::vector<EigenCertification> eigen;
  bool distinct_ok = false;   // eigenvalues pairwise distinct as forms
  bool mult_sum_ok = false;   // multiplicities sum to the dimension
  bool trace_ok = false;      // trace(M) = sum m_k lambda_k, symbolic
  bool row_sum_applicable = false;
  bool row_sum_ok = false;    // every row sums to the top eigenvalue
  bool diagonalizable_ok = false;  // kernel dims sum to dim at every seed
  bool pass = false;
  std::string failure;
  long long elapsed_ms = 0;

  nlohmann::json to_json(bool with_timing = true) const;
};

// Builds the matrix and certifies the predicted spectrum: symbolic trace
// and row-sum identities, then exact kernel dimensions of M@a - lambda(a) I
// at one seeded specialization per seed. jobs > 1 certifies eigenvalues in
// parallel (each elimination stays single-threaded).
CertificationReport certify(const SpectrumSpec& spec,
                            const std::vector<uint64_t>& seeds, int jobs = 1);

struct MinPolyReport {
  MatrixKind kind;
  int n;
  std::vector<LinForm> roots;
  bool annihilates = false;             // product of all factors is zero
  std::vector<bool> omitted_nonzero;    // dropping factor k leaves nonzero
  bool minimal = false;
  bool pass = false;
  long long elapsed_ms = 0;

  nlohmann::json to_json(bool with_timing = true) const;
};

// Verifies prod_k (M - lambda_k I) = 0 exactly and that omitting any single
// factor leaves a nonzero product. F runs on its integer reduction
// (every entry is an integer multiple of z), IF/DIF expand polynomial
// entries symbolically, MIF and SPECHT_IF are cheap directly.
MinPolyReport minimal_polynomial_check(MatrixKind kind, int n,
                                       const std::vector<LinForm>& roots);

struct LejReport {
  int n = 0;
  std::string p;
  bool ones_vector_ok = false;   // J * ones = n! p * ones, symbolic
  bool differences_ok = false;   // J annihilates e_iota - e_sigma, symbolic
  long long kernel_top = -1;     // expect 1
  long long kernel_zero = -1;    // expect n! - 1
  bool pass = false;

  nlohmann::json to_json() const;
};

// All-entries-p matrix of size n! (the regular representation of
// sum_sigma p(z) sigma): spectrum {n! p : 1, 0 : n!-1}.
LejReport lej_spectrum_check(int n, const Poly& p, uint64_t seed = 1);

}  // namespace permspec
