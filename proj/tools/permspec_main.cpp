#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <thread>

#include "permspec/characters.hpp"
#include "permspec/errata.hpp"
#include "permspec/groupalg.hpp"
#include "permspec/matrix_ops.hpp"
#include "permspec/oracles.hpp"
#include "permspec/properties.hpp"
#include "permspec/specht.hpp"
#include "permspec/spectra.hpp"
#include "permspec/table_cache.hpp"

namespace {

using namespace permspec;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

const std::vector<uint64_t> kDefaultSeeds = {1, 2, 3};

int default_jobs() {
  const unsigned hc = std::thread::hardware_concurrency();
  return static_cast<int>(std::min(8u, std::max(1u, hc)));
}

StatKind stat_kind_of(MatrixKind kind) {
  switch (kind) {
    case MatrixKind::F: return StatKind::FIX_Z;
    case MatrixKind::IF: return StatKind::INV_Y_PLUS_FIX_Z;
    case MatrixKind::DIF: return StatKind::DES_X_PLUS_INV_Y_PLUS_FIX_Z;
    case MatrixKind::MIF: return StatKind::MAJ_PLUS_INV_PLUS_FIX;
    default: throw UsageError("matrix subcommand supports F, IF, DIF, MIF");
  }
}

int cmd_matrix(const std::string& kind_name, int n, const std::string& dump) {
  const MatrixKind kind = matrix_kind_from_name(kind_name);
  RegularMatrixTable table(stat_kind_of(kind), n);
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!dump.empty()) {
    file.open(dump);
    if (!file) throw UsageError("cannot open dump path " + dump);
    os = &file;
  }
  auto q = [](const std::string& s) { return "\"" + s + "\""; };
  *os << q("");
  for (const Permutation& p : table.perms()) *os << "," << q(p.str());
  *os << "\n";
  for (size_t i = 0; i < table.dim(); ++i) {
    *os << q(table.perms()[i].str());
    for (size_t j = 0; j < table.dim(); ++j)
      *os << "," << q(table.entry(i, j).str());
    *os << "\n";
  }
  return kExitPass;
}

int cmd_certify(const std::string& kind_name, int n,
                std::vector<uint64_t> seeds, bool symbolic, int jobs,
                bool with_timing) {
  const MatrixKind kind = matrix_kind_from_name(kind_name);
  if (seeds.empty()) seeds = kDefaultSeeds;
  const SpectrumSpec spec = predicted_spectrum(kind, n);
  const CertificationReport rep = certify(spec, seeds, jobs);
  nlohmann::json out = rep.to_json(with_timing);
  bool pass = rep.pass;
  if (symbolic) {
    const MinPolyReport mp = minimal_polynomial_check(kind, n, spec.eigenvalues());
    out["minimal_polynomial"] = mp.to_json(with_timing);
    pass = pass && mp.pass;
  }
  std::cout << out.dump(2) << "\n";
  return pass ? kExitPass : kExitFail;
}

int cmd_specht(int n, std::vector<uint64_t> seeds, bool with_timing) {
  if (seeds.empty()) seeds = kDefaultSeeds;
  const ThspReport rep = verify_thsp(n, seeds);
  nlohmann::json j;
  j["n"] = rep.n;
  j["fix_action_scalar"] = rep.fix_action_scalar;
  j["inv_action_rank1"] = rep.inv_action_rank1;
  j["inv_trace_is_leg"] = rep.inv_trace_is_leg;
  j["prinv_factorization"] = rep.prinv_factorization;
  j["kernel_dims_top"] = rep.kernel_dims_top;
  j["kernel_dims_scalar"] = rep.kernel_dims_scalar;
  j["diagonalizable"] = rep.diagonalizable;
  j["verdict"] = rep.pass ? "PASS" : "FAIL";
  if (!rep.pass) j["failure"] = rep.failure;
  (void)with_timing;
  std::cout << j.dump(2) << "\n";
  return rep.pass ? kExitPass : kExitFail;
}

int cmd_lemmas(int n, std::vector<std::string> suites) {
  if (suites.empty())
    suites = {"leij", "leijk", "leyij", "prfix", "recurrence",
              "leg",  "lej",   "lambda", "fixsq"};
  bool all_pass = true;
  auto emit = [](const nlohmann::json& j) { std::cout << j.dump() << "\n"; };
  for (const std::string& suite : suites) {
    if (suite == "leij") {
      for (const LemmaCheck& c : leij_check(n)) {
        all_pass = all_pass && c.pass;
        emit(c.to_json());
      }
    } else if (suite == "leijk") {
      for (const LemmaCheck& c : leijk_check(n)) {
        all_pass = all_pass && c.pass;
        emit(c.to_json());
      }
    } else if (suite == "leyij") {
      for (const LemmaCheck& c : leyij_check(n)) {
        all_pass = all_pass && c.pass;
        emit(c.to_json());
      }
    } else if (suite == "prfix") {
      const IdentitySuiteReport r = prfix_check(n);
      all_pass = all_pass && r.pass;
      emit(r.to_json());
    } else if (suite == "recurrence") {
      const IdentitySuiteReport r = transposition_recurrence_check(n);
      all_pass = all_pass && r.pass;
      emit(r.to_json());
    } else if (suite == "leg") {
      const LemmaCheck c = leg_check(n);
      all_pass = all_pass && c.pass;
      emit(c.to_json());
    } else if (suite == "lej") {
      auto reg = VarRegistry::of({VarId::z()});
      const LejReport r = lej_spectrum_check(n, Poly::variable(VarId::z(), reg));
      all_pass = all_pass && r.pass;
      emit(r.to_json());
    } else if (suite == "lambda") {
      const LambdaReport r = lambda_check(n);
      all_pass = all_pass && r.pass;
      emit(r.to_json());
    } else if (suite == "fixsq") {
      const long long brute = sum_fix_sq(n);
      LemmaCheck c;
      c.lemma = "fixsq";
      c.n = n;
      c.closed_form = std::to_string(n >= 2 ? 2 * factorial(n) : 1);
      c.brute_force = std::to_string(brute);
      c.pass = (c.closed_form == c.brute_force);
      all_pass = all_pass && c.pass;
      emit(c.to_json());
      emit(sum_fix_sq_remark_entry().to_json());
    } else {
      throw UsageError("unknown lemma suite '" + suite + "'");
    }
  }
  return all_pass ? kExitPass : kExitFail;
}

int cmd_characters(int n, const std::string& dump) {
  const char* env = std::getenv("PERMSPEC_CACHE_DIR");
  const CharacterTable t = character_table_cached(n, env ? env : "");
  if (!dump.empty()) {
    std::ofstream file(dump);
    if (!file) throw UsageError("cannot open dump path " + dump);
    dump_character_table_csv(file, t);
  }
  nlohmann::json j;
  j["n"] = n;
  nlohmann::json parts = nlohmann::json::array();
  for (size_t i = 0; i < t.parts.size(); ++i) {
    nlohmann::json p;
    p["partition"] = t.parts[i].label();
    p["dim"] = t.dims[i];
    p["class_size"] = t.sizes[i];
    parts.push_back(std::move(p));
  }
  j["partitions"] = std::move(parts);

  bool pass = true;
  if (n >= 4 && n <= 8) {
    const DichotomyResult d = character_sum_dichotomy(n);
    nlohmann::json dj;
    nlohmann::json sums = nlohmann::json::object();
    for (const auto& [lambda, s] : d.sums) sums[lambda.label()] = s;
    dj["sums"] = std::move(sums);
    nlohmann::json nonzero = nlohmann::json::array();
    for (const Partition& p : d.nonzero) nonzero.push_back(p.label());
    dj["nonzero"] = std::move(nonzero);
    dj["two_nonzero"] = d.two_nonzero;
    dj["values_are_n_factorial"] = d.values_are_n_factorial;
    dj["dims_are_1_and_n_minus_1"] = d.dims_are_1_and_n_minus_1;
    dj["verdict"] = d.pass ? "PASS" : "FAIL";
    j["dichotomy"] = std::move(dj);
    pass = d.pass;
  }
  std::cout << j.dump(2) << "\n";
  return pass ? kExitPass : kExitFail;
}

int cmd_errata(int nmax) {
  const ErrataLedger ledger = errata_ledger(nmax);
  std::cout << ledger.to_json().dump(2) << "\n";
  return ledger.no_new_discrepancy ? kExitPass : kExitFail;
}

int cmd_properties(uint64_t seed) {
  bool all_pass = true;
  for (const PropertyReport& r : run_property_suites(seed)) {
    all_pass = all_pass && r.pass;
    std::cout << r.to_json().dump() << "\n";
  }
  return all_pass ? kExitPass : kExitFail;
}

int run(int argc, char** argv) {
  CLI::App app{"exact spectra of multinomial permutation statistics"};
  app.require_subcommand(1);

  std::string kind = "IF", dump, suites_csv;
  int n = 4;
  int nmax = 5;
  int jobs = default_jobs();
  uint64_t seed = 1;
  std::vector<uint64_t> seeds;
  bool symbolic = false;
  bool no_timing = false;

  auto* m = app.add_subcommand("matrix", "build a statistic matrix and dump CSV");
  m->add_option("--kind", kind, "F, IF, DIF or MIF")->required();
  m->add_option("--n", n, "group degree")->required();
  m->add_option("--dump", dump, "CSV output path (stdout when omitted)");

  auto* c = app.add_subcommand("certify", "certify a registered spectrum");
  c->add_option("--kind", kind, "F, IF, DIF, MIF or SPECHT_IF")->required();
  c->add_option("--n", n, "group degree")->required();
  c->add_option("--seeds", seeds, "specialization seeds")->delimiter(',');
  c->add_flag("--symbolic", symbolic, "also run the minimal polynomial check");
  c->add_option("--jobs", jobs, "parallel eigenvalue tasks");
  c->add_flag("--no-timing", no_timing, "omit elapsed_ms for byte-comparable output");

  auto* sp = app.add_subcommand("specht", "certify the standard-module action spectrum");
  sp->add_option("--n", n, "group degree")->required();
  sp->add_option("--seeds", seeds, "specialization seeds")->delimiter(',');

  auto* le = app.add_subcommand("lemmas", "run counting-lemma suites (JSON lines)");
  le->add_option("--n", n, "group degree")->required();
  le->add_option("--suite", suites_csv,
                 "comma list: leij,leijk,leyij,prfix,recurrence,leg,lej,lambda,fixsq");

  auto* ch = app.add_subcommand("characters", "character table and sum dichotomy");
  ch->add_option("--n", n, "group degree")->required();
  ch->add_option("--dump", dump, "character table CSV path");

  auto* er = app.add_subcommand("errata", "full errata ledger run");
  er->add_option("--nmax", nmax, "largest degree to recheck")->required();

  auto* pr = app.add_subcommand("properties", "standalone property suites");
  pr->add_option("--seed", seed, "randomization seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (m->parsed()) return cmd_matrix(kind, n, dump);
    if (c->parsed()) return cmd_certify(kind, n, seeds, symbolic, jobs, !no_timing);
    if (sp->parsed()) return cmd_specht(n, seeds, !no_timing);
    if (le->parsed()) {
      std::vector<std::string> suites;
      std::stringstream ss(suites_csv);
      std::string tok;
      while (std::getline(ss, tok, ','))
        if (!tok.empty()) suites.push_back(tok);
      return cmd_lemmas(n, suites);
    }
    if (ch->parsed()) return cmd_characters(n, dump);
    if (er->parsed()) return cmd_errata(nmax);
    if (pr->parsed()) return cmd_properties(seed);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource cap exceeded: " << e.what() << "\n";
    return kExitResource;
  } catch (const SetupError& e) {
    std::cerr << "certification setup error: " << e.what() << "\n";
    return kExitResource;
  }
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
