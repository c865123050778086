// Acceptance suite: runs every certification target end to end and prints
// one PASS/FAIL line per criterion. Exit code 0 only when all pass.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "permspec/characters.hpp"
#include "permspec/errata.hpp"
#include "permspec/groupalg.hpp"
#include "permspec/oracles.hpp"
#include "permspec/specht.hpp"
#include "permspec/spectra.hpp"

using namespace permspec;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;
const std::vector<uint64_t> kSeeds = {1, 2, 3};

struct Criterion {
  explicit Criterion(std::string name) : name_(std::move(name)) {}

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass_ = false;
      notes_ += (notes_.empty() ? "" : "; ") + what;
    }
  }

  void finish(Clock::time_point t0) {
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
            .count();
    std::printf("[%s] %s (%lld ms)%s%s\n", pass_ ? "PASS" : "FAIL",
                name_.c_str(), static_cast<long long>(ms),
                notes_.empty() ? "" : " -- ", notes_.c_str());
    std::fflush(stdout);
    if (!pass_) ++g_failures;
  }

  std::string name_;
  bool pass_ = true;
  std::string notes_;
};

void run(const std::string& name, const std::function<void(Criterion&)>& body) {
  Criterion c(name);
  const auto t0 = Clock::now();
  try {
    body(c);
  } catch (const std::exception& e) {
    c.require(false, std::string("exception: ") + e.what());
  }
  c.finish(t0);
}

std::vector<long long> kernel_dims_at_seed(const CertificationReport& rep,
                                           size_t seed_index) {
  std::vector<long long> dims;
  for (const auto& e : rep.eigen) dims.push_back(e.kernel_dims[seed_index]);
  return dims;
}

}  // namespace

int main() {
  // 1. golden small cases
  run("criterion 1: golden spectra at n = 1, 2, 3", [](Criterion& c) {
    const auto t0 = Clock::now();
    const CertificationReport r1 =
        certify(predicted_spectrum(MatrixKind::IF, 1), kSeeds);
    const CertificationReport r2 =
        certify(predicted_spectrum(MatrixKind::IF, 2), kSeeds);
    const CertificationReport r3 =
        certify(predicted_spectrum(MatrixKind::IF, 3), kSeeds);
    c.require(r1.pass, "n=1 certification");
    c.require(r2.pass, "n=2 certification");
    c.require(r3.pass, "n=3 certification");
    c.require(kernel_dims_at_seed(r1, 0) == std::vector<long long>{1}, "n=1 mults");
    c.require(kernel_dims_at_seed(r2, 0) == std::vector<long long>{1, 1},
              "n=2 mults");
    c.require(kernel_dims_at_seed(r3, 0) == std::vector<long long>{1, 1, 2, 2},
              "n=3 mults");
    const RegularMatrixTable if3(StatKind::INV_Y_PLUS_FIX_Z, 3);
    c.require(if3.trace() == LinForm::variable(VarId::z(), Rational(18)),
              "symbolic trace 18z");
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        Clock::now() - t0)
                        .count();
    c.require(ms < 1000, "runtime " + std::to_string(ms) + " ms >= 1 s");
  });

  // 2. fix matrix spectrum at n = 4, 5, 6
  run("criterion 2: fix-matrix spectrum at n = 4, 5, 6", [](Criterion& c) {
    for (int n = 4; n <= 6; ++n) {
      const auto t0 = Clock::now();
      const CertificationReport rep =
          certify(predicted_spectrum(MatrixKind::F, n), kSeeds, 2);
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          Clock::now() - t0)
                          .count();
      c.require(rep.pass, "certification n=" + std::to_string(n));
      const std::vector<long long> expect = {
          1, static_cast<long long>(n - 1) * (n - 1),
          factorial(n) - static_cast<long long>(n - 1) * (n - 1) - 1};
      for (size_t s = 0; s < kSeeds.size(); ++s)
        c.require(kernel_dims_at_seed(rep, s) == expect,
                  "kernel dims n=" + std::to_string(n));
      if (n == 6)
        c.require(ms < 600000,
                  "n=6 runtime " + std::to_string(ms) + " ms >= 10 min");
    }
    for (int n = 4; n <= 5; ++n) {
      const MinPolyReport mp = minimal_polynomial_check(
          MatrixKind::F, n, predicted_spectrum(MatrixKind::F, n).eigenvalues());
      c.require(mp.annihilates, "minimal polynomial vanishes n=" + std::to_string(n));
      c.require(mp.minimal, "minimality n=" + std::to_string(n));
    }
  });

  // 3. inv+fix matrix spectrum at n = 4, 5
  run("criterion 3: inv+fix spectrum at n = 4, 5", [](Criterion& c) {
    const CertificationReport r4 =
        certify(predicted_spectrum(MatrixKind::IF, 4), kSeeds, 2);
    c.require(r4.pass, "n=4 certification");
    c.require(r4.trace_ok && r4.row_sum_ok, "n=4 symbolic identities");
    for (size_t s = 0; s < kSeeds.size(); ++s)
      c.require(kernel_dims_at_seed(r4, s) ==
                    std::vector<long long>{1, 3, 3, 6, 11},
                "n=4 kernel dims");

    const CertificationReport r5 =
        certify(predicted_spectrum(MatrixKind::IF, 5), kSeeds, 2);
    c.require(r5.pass, "n=5 certification");
    c.require(r5.trace_ok && r5.row_sum_ok, "n=5 symbolic identities");
    for (size_t s = 0; s < kSeeds.size(); ++s)
      c.require(kernel_dims_at_seed(r5, s) ==
                    std::vector<long long>{1, 4, 6, 12, 97},
                "n=5 kernel dims");

    const MinPolyReport mp = minimal_polynomial_check(
        MatrixKind::IF, 4, predicted_spectrum(MatrixKind::IF, 4).eigenvalues());
    c.require(mp.annihilates, "five-factor product vanishes at n=4");
  });

  // 4. substitution corollary
  run("criterion 4: adjacent-y substitution maps IF onto DIF", [](Criterion& c) {
    for (int n = 4; n <= 5; ++n) {
      const SpectrumSpec iff = predicted_spectrum(MatrixKind::IF, n);
      const SpectrumSpec dif = predicted_spectrum(MatrixKind::DIF, n);
      c.require(iff.eigenpairs.size() == dif.eigenpairs.size(),
                "eigenpair counts");
      for (size_t k = 0; k < iff.eigenpairs.size(); ++k) {
        c.require(substitute_y_adjacent(iff.eigenpairs[k].value) ==
                      dif.eigenpairs[k].value,
                  "substituted eigenvalue " + std::to_string(k));
        c.require(iff.eigenpairs[k].multiplicity == dif.eigenpairs[k].multiplicity,
                  "multiplicity " + std::to_string(k));
      }
      const CertificationReport rep = certify(dif, kSeeds, 2);
      c.require(rep.pass, "direct DIF certification n=" + std::to_string(n));
    }
  });

  // 5. scalar maj+inv+fix spectra
  run("criterion 5: maj+inv+fix spectra at n = 4, 5", [](Criterion& c) {
    const SpectrumSpec m4 = predicted_spectrum(MatrixKind::MIF, 4);
    const std::vector<long long> values = {168, -24, -16, 8, 0};
    const std::vector<long long> mults = {1, 3, 3, 6, 11};
    for (size_t k = 0; k < 5; ++k) {
      c.require(m4.eigenpairs[k].value == LinForm(Rational(values[k])),
                "n=4 eigenvalue " + std::to_string(k));
      c.require(m4.eigenpairs[k].multiplicity == mults[k],
                "n=4 multiplicity " + std::to_string(k));
    }
    c.require(certify(m4, kSeeds, 2).pass, "n=4 certification");
    c.require(certify(predicted_spectrum(MatrixKind::MIF, 5), kSeeds, 2).pass,
              "n=5 certification");

    // the printed -2n!/6 is not an eigenvalue; -2n!/3 is, with mult C(n-1,2)
    RegularMatrixTable table(StatKind::MAJ_PLUS_INV_PLUS_FIX, 4);
    const Matrix<Rational> m = table.specialized(Assignment{});
    c.require(kernel_dim(shift_diagonal(m, Rational(-8))) == 0,
              "-2n!/6 must not be an eigenvalue");
    c.require(kernel_dim(shift_diagonal(m, Rational(-16))) == 3,
              "-2n!/3 eigenvalue multiplicity");
    const ErrataEntry entry = sum_fix_sq_remark_entry();
    c.require(entry.kind == "discrepancy", "remark entry recorded");
  });

  // 6. standard-module action
  run("criterion 6: specht action spectrum at n = 4..7", [](Criterion& c) {
    for (int n = 4; n <= 7; ++n) {
      const ThspReport rep = verify_thsp(n, kSeeds);
      c.require(rep.pass, "n=" + std::to_string(n) + ": " + rep.failure);
      for (size_t s = 0; s < kSeeds.size(); ++s) {
        c.require(rep.kernel_dims_top[s] == 1,
                  "top multiplicity n=" + std::to_string(n));
        c.require(rep.kernel_dims_scalar[s] == n - 2,
                  "scalar multiplicity n=" + std::to_string(n));
      }
      if (n <= 6)
        c.require(rep.fix_action_scalar,
                  "fix action scalar identity n=" + std::to_string(n));
      if (n <= 5) {
        c.require(rep.inv_action_rank1, "rank-1 minors n=" + std::to_string(n));
        c.require(rep.inv_trace_is_leg, "trace equals g n=" + std::to_string(n));
      }
    }
  });

  // 7. lemma suites
  run("criterion 7: counting-lemma suites", [](Criterion& c) {
    const auto t0 = Clock::now();
    for (int n = 4; n <= 5; ++n) {
      for (const LemmaCheck& ch : leij_check(n))
        c.require(ch.pass, "leij n=" + std::to_string(n));
      for (const LemmaCheck& ch : leijk_check(n))
        c.require(ch.pass, "leijk n=" + std::to_string(n));
      for (const LemmaCheck& ch : leyij_check(n))
        c.require(ch.pass, "leyij n=" + std::to_string(n));
      c.require(prfix_check(n).pass, "prfix n=" + std::to_string(n));
      c.require(transposition_recurrence_check(n).pass,
                "recurrence n=" + std::to_string(n));
      c.require(leg_check(n).pass, "leg n=" + std::to_string(n));
      auto reg = VarRegistry::of({VarId::z()});
      c.require(lej_spectrum_check(n, Poly::variable(VarId::z(), reg)).pass,
                "lej n=" + std::to_string(n));
      c.require(lambda_check(n).pass, "lambda n=" + std::to_string(n));
      c.require(sum_fix_sq(n) == 2 * factorial(n), "fixsq n=" + std::to_string(n));
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        Clock::now() - t0)
                        .count();
    c.require(ms < 300000, "n<=5 runtime " + std::to_string(ms) + " ms >= 5 min");
    for (const LemmaCheck& ch : leij_check(6)) c.require(ch.pass, "leij n=6");
    for (const LemmaCheck& ch : leijk_check(6)) c.require(ch.pass, "leijk n=6");
  });

  // 8. character dichotomy and dimension bookkeeping
  run("criterion 8: character dichotomy at n = 4..7", [](Criterion& c) {
    for (int n = 4; n <= 7; ++n) {
      const DichotomyResult d = character_sum_dichotomy(n);
      c.require(d.pass, "dichotomy n=" + std::to_string(n));

      // block dimensions reconcile the fix-matrix multiplicities
      long long d_triv = 0, d_std = 0, rest = 0;
      for (const Partition& p : partitions(n)) {
        const long long dim = hook_dim(p);
        if (p == Partition(std::vector<int>{n}))
          d_triv = dim;
        else if (p == Partition({n - 1, 1}))
          d_std = dim;
        else
          rest += dim * dim;
      }
      c.require(d_triv * d_triv == 1, "trivial block n=" + std::to_string(n));
      c.require(d_std * d_std == static_cast<long long>(n - 1) * (n - 1),
                "standard block n=" + std::to_string(n));
      c.require(rest == factorial(n) - static_cast<long long>(n - 1) * (n - 1) - 1,
                "residual blocks n=" + std::to_string(n));
    }
  });

  // 9. errata ledger
  run("criterion 9: errata ledger at n <= 5", [](Criterion& c) {
    const ErrataLedger ledger = errata_ledger(5);
    c.require(ledger.no_new_discrepancy, "no new discrepancy");
    for (const std::string& f : ledger.failures) c.require(false, f);
    c.require(ledger.discrepancy_count() == 4, "exactly four discrepancies");
    const std::vector<std::string> expected = {
        "inv_definition_condition", "sum_fix_squared_remark",
        "lambda_extra_factorial", "mif_third_eigenvalue"};
    for (const std::string& tag : expected) {
      bool found = false;
      for (const ErrataEntry& e : ledger.entries)
        if (e.tag == tag && e.kind == "discrepancy" && !e.witness.empty())
          found = true;
      c.require(found, "entry " + tag);
    }
  });

  // 10. property suites through the cli
  run("criterion 10: property suites via one cli invocation", [](Criterion& c) {
    const std::string cmd =
        std::string(PERMSPEC_CLI_PATH) + " properties --seed 1 > /dev/null";
    const int status = std::system(cmd.c_str());
    c.require(status != -1 && WIFEXITED(status) && WEXITSTATUS(status) == 0,
              "cli exit " + std::to_string(WEXITSTATUS(status)));
  });

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", g_failures);
  return 1;
}
