#include <doctest.h>

#include <map>

#include "permspec/assignment.hpp"
#include "permspec/groupalg.hpp"
#include "permspec/spectra.hpp"

using namespace permspec;

namespace {

LinForm zf(long long c) { return LinForm::variable(VarId::z(), Rational(c)); }

}  // namespace

TEST_CASE("registered spectrum for the fix matrix at n = 4") {
  const SpectrumSpec spec = predicted_spectrum(MatrixKind::F, 4);
  REQUIRE(spec.eigenpairs.size() == 3);
  CHECK(spec.eigenpairs[0].value == zf(24));
  CHECK(spec.eigenpairs[0].multiplicity == 1);
  CHECK(spec.eigenpairs[1].value == zf(8));
  CHECK(spec.eigenpairs[1].multiplicity == 9);
  CHECK(spec.eigenpairs[2].value.is_zero());
  CHECK(spec.eigenpairs[2].multiplicity == 14);
}

TEST_CASE("golden small spectra") {
  const SpectrumSpec s1 = predicted_spectrum(MatrixKind::IF, 1);
  REQUIRE(s1.eigenpairs.size() == 1);
  CHECK(s1.eigenpairs[0].value == zf(1));

  const SpectrumSpec s2 = predicted_spectrum(MatrixKind::IF, 2);
  CHECK(s2.eigenpairs[0].value ==
        LinForm::variable(VarId::y(1, 2)) + zf(2));
  CHECK(s2.eigenpairs[1].value ==
        zf(2) - LinForm::variable(VarId::y(1, 2)));

  const SpectrumSpec s3 = predicted_spectrum(MatrixKind::IF, 3);
  REQUIRE(s3.eigenpairs.size() == 4);
  CHECK(s3.eigenpairs[0].multiplicity == 1);
  CHECK(s3.eigenpairs[1].multiplicity == 1);
  CHECK(s3.eigenpairs[2].multiplicity == 2);
  CHECK(s3.eigenpairs[3].multiplicity == 2);
  CHECK(s3.eigenpairs[3].value == zf(3));

  CHECK_THROWS_AS(predicted_spectrum(MatrixKind::F, 3), UsageError);
  CHECK_THROWS_AS(predicted_spectrum(MatrixKind::DIF, 2), UsageError);
}

TEST_CASE("scalar spectrum registry values at n = 4") {
  const SpectrumSpec spec = predicted_spectrum(MatrixKind::MIF, 4);
  REQUIRE(spec.eigenpairs.size() == 5);
  const std::vector<long long> values = {168, -24, -16, 8, 0};
  const std::vector<long long> mults = {1, 3, 3, 6, 11};
  for (size_t k = 0; k < 5; ++k) {
    CHECK(spec.eigenpairs[k].value == LinForm(Rational(values[k])));
    CHECK(spec.eigenpairs[k].multiplicity == mults[k]);
  }
}

TEST_CASE("multiplicities sum to the dimension across the registry") {
  for (int n = 4; n <= 7; ++n)
    for (MatrixKind kind : {MatrixKind::F, MatrixKind::IF, MatrixKind::DIF,
                            MatrixKind::MIF, MatrixKind::SPECHT_IF}) {
      const SpectrumSpec spec = predicted_spectrum(kind, n);
      long long total = 0;
      for (const EigenPair& e : spec.eigenpairs) total += e.multiplicity;
      CHECK(total == spec.dimension());
    }
}

TEST_CASE("trace equals the multiplicity-weighted eigenvalue sum up to n = 6") {
  const std::map<MatrixKind, StatKind> stats = {
      {MatrixKind::F, StatKind::FIX_Z},
      {MatrixKind::IF, StatKind::INV_Y_PLUS_FIX_Z},
      {MatrixKind::DIF, StatKind::DES_X_PLUS_INV_Y_PLUS_FIX_Z}};
  for (int n = 4; n <= 6; ++n)
    for (const auto& [kind, stat] : stats) {
      const RegularMatrixTable table(stat, n);
      // tr F(n) = n * n! * z, and likewise n! * stat(iota) in general
      CHECK(table.trace() ==
            stat_value(stat, Permutation::identity(n)) * Rational(factorial(n)));
      LinForm weighted;
      for (const EigenPair& e : predicted_spectrum(kind, n).eigenpairs)
        weighted += e.value * Rational(e.multiplicity);
      CHECK(table.trace() == weighted);
    }
}

TEST_CASE("adjacent-y substitution maps one registry onto the other") {
  for (int n = 4; n <= 7; ++n) {
    const SpectrumSpec iff = predicted_spectrum(MatrixKind::IF, n);
    const SpectrumSpec dif = predicted_spectrum(MatrixKind::DIF, n);
    REQUIRE(iff.eigenpairs.size() == dif.eigenpairs.size());
    for (size_t k = 0; k < iff.eigenpairs.size(); ++k) {
      CHECK(substitute_y_adjacent(iff.eigenpairs[k].value) ==
            dif.eigenpairs[k].value);
      CHECK(iff.eigenpairs[k].multiplicity == dif.eigenpairs[k].multiplicity);
    }
  }
}

TEST_CASE("scalar registry is the specialized multinomial registry") {
  for (int n = 4; n <= 7; ++n) {
    const Assignment a = mif_assignment(n);
    const SpectrumSpec dif = predicted_spectrum(MatrixKind::DIF, n);
    const SpectrumSpec mif = predicted_spectrum(MatrixKind::MIF, n);
    for (size_t k = 0; k < dif.eigenpairs.size(); ++k)
      CHECK(LinForm(dif.eigenpairs[k].value.eval(a)) ==
            mif.eigenpairs[k].value);
  }
}

TEST_CASE("certification of the fix matrix at n = 4") {
  const CertificationReport rep =
      certify(predicted_spectrum(MatrixKind::F, 4), {1, 2, 3}, 2);
  CHECK(rep.pass);
  CHECK(rep.trace_ok);
  CHECK(rep.row_sum_ok);
  CHECK(rep.diagonalizable_ok);
  REQUIRE(rep.eigen.size() == 3);
  CHECK(rep.eigen[0].kernel_dims == std::vector<long long>{1, 1, 1});
  CHECK(rep.eigen[1].kernel_dims == std::vector<long long>{9, 9, 9});
  CHECK(rep.eigen[2].kernel_dims == std::vector<long long>{14, 14, 14});
}

TEST_CASE("certification of the golden spectra") {
  for (int n = 1; n <= 3; ++n) {
    const CertificationReport rep =
        certify(predicted_spectrum(MatrixKind::IF, n), {7});
    CHECK(rep.pass);
  }
  const CertificationReport rep3 =
      certify(predicted_spectrum(MatrixKind::IF, 3), {1, 2, 3});
  std::vector<long long> dims;
  for (const auto& e : rep3.eigen) dims.push_back(e.kernel_dims[0]);
  CHECK(dims == std::vector<long long>{1, 1, 2, 2});
}

TEST_CASE("certification of the inv+fix matrix at n = 4") {
  const CertificationReport rep =
      certify(predicted_spectrum(MatrixKind::IF, 4), {1, 2, 3}, 2);
  CHECK(rep.pass);
  std::vector<long long> dims;
  for (const auto& e : rep.eigen) dims.push_back(e.kernel_dims[0]);
  CHECK(dims == std::vector<long long>{1, 3, 3, 6, 11});
}

TEST_CASE("a wrong prediction fails with a witness") {
  SpectrumSpec spec = predicted_spectrum(MatrixKind::F, 4);
  std::swap(spec.eigenpairs[0].multiplicity, spec.eigenpairs[1].multiplicity);
  const CertificationReport rep = certify(spec, {1});
  CHECK(!rep.pass);
  CHECK(!rep.failure.empty());
  CHECK(!rep.trace_ok);

  SpectrumSpec wrong_value = predicted_spectrum(MatrixKind::F, 4);
  wrong_value.eigenpairs[1].value = zf(9);
  const CertificationReport rep2 = certify(wrong_value, {1});
  CHECK(!rep2.pass);
  REQUIRE(rep2.eigen.size() == 3);
  CHECK(rep2.eigen[1].kernel_dims[0] == 0);
}

TEST_CASE("certify input validation") {
  CHECK_THROWS_AS(certify(predicted_spectrum(MatrixKind::F, 4), {}),
                  UsageError);
  CHECK_THROWS_AS(certify(predicted_spectrum(MatrixKind::F, 7), {1}),
                  ResourceError);
}

TEST_CASE("minimal polynomial of the fix matrix") {
  const SpectrumSpec spec = predicted_spectrum(MatrixKind::F, 4);
  const MinPolyReport rep =
      minimal_polynomial_check(MatrixKind::F, 4, spec.eigenvalues());
  CHECK(rep.pass);
  CHECK(rep.annihilates);
  for (bool nz : rep.omitted_nonzero) CHECK(nz);

  const MinPolyReport rep5 = minimal_polynomial_check(
      MatrixKind::F, 5, predicted_spectrum(MatrixKind::F, 5).eigenvalues());
  CHECK(rep5.pass);

  // omitting enforcement: a root list missing one eigenvalue cannot vanish
  const MinPolyReport partial = minimal_polynomial_check(
      MatrixKind::F, 4, {spec.eigenpairs[0].value, spec.eigenpairs[1].value});
  CHECK(!partial.annihilates);

  CHECK_THROWS_AS(minimal_polynomial_check(
                      MatrixKind::F, 4, {LinForm::variable(VarId::y(1, 2))}),
                  UsageError);
  CHECK_THROWS_AS(minimal_polynomial_check(MatrixKind::IF, 5,
                                           predicted_spectrum(MatrixKind::IF, 5)
                                               .eigenvalues()),
                  ResourceError);
}

TEST_CASE("minimal polynomial of the standard-module action") {
  const SpectrumSpec spec = predicted_spectrum(MatrixKind::SPECHT_IF, 4);
  const MinPolyReport rep =
      minimal_polynomial_check(MatrixKind::SPECHT_IF, 4, spec.eigenvalues());
  CHECK(rep.pass);
}

TEST_CASE("all-entries-p spectrum") {
  auto reg = VarRegistry::of({VarId::z()});
  const Poly z = Poly::variable(VarId::z(), reg);

  const LejReport r4 = lej_spectrum_check(4, z);
  CHECK(r4.pass);
  CHECK(r4.kernel_top == 1);
  CHECK(r4.kernel_zero == 23);

  const LejReport r2 = lej_spectrum_check(2, Poly::constant(Rational(1), reg));
  CHECK(r2.pass);
  CHECK(r2.kernel_top == 1);
  CHECK(r2.kernel_zero == 1);

  const LejReport rq = lej_spectrum_check(3, z * z * Rational(3, 2));
  CHECK(rq.pass);

  CHECK_THROWS_AS(lej_spectrum_check(3, Poly(reg)), UsageError);
}

TEST_CASE("report json determinism") {
  const CertificationReport rep =
      certify(predicted_spectrum(MatrixKind::IF, 2), {5});
  const auto j1 = rep.to_json(false).dump();
  const auto j2 = rep.to_json(false).dump();
  CHECK(j1 == j2);
  CHECK(j1.find("elapsed_ms") == std::string::npos);
  CHECK(rep.to_json(true).dump().find("elapsed_ms") != std::string::npos);
}

TEST_CASE("specht action spectrum through the generic engine") {
  const CertificationReport rep =
      certify(predicted_spectrum(MatrixKind::SPECHT_IF, 5), {1, 2, 3});
  CHECK(rep.pass);
  CHECK(!rep.row_sum_applicable);
  CHECK(rep.eigen[0].kernel_dims == std::vector<long long>{1, 1, 1});
  CHECK(rep.eigen[1].kernel_dims == std::vector<long long>{3, 3, 3});
}
