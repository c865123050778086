#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace permspec {

// Machine-readable record of source-text statements that exhaustive
// computation contradicts (kind "discrepancy"), plus formatting and
// labeling-convention findings that are not formula errors. Each entry
// carries the printed value, the computed value, and the smallest witness n.
struct ErrataEntry {
  std::string tag;
  std::string kind;  // "discrepancy" | "typography" | "convention"
  std::string statement;
  std::string printed;
  std::string computed;
  int witness_n = 0;
  std::string witness;

  nlohmann::json to_json() const;
};

struct ErrataLedger {
  std::vector<ErrataEntry> entries;
  // True when every suite re-run during ledger construction passed, i.e.
  // no discrepancy beyond the recorded ones was found.
  bool no_new_discrepancy = true;
  std::vector<std::string> failures;

  long long discrepancy_count() const;
  nlohmann::json to_json() const;
};

// Recomputes every witness and re-runs the lemma and certification suites
// up to min(nmax, 5) (the cheap fixed-point lemmas up to min(nmax, 6)).
ErrataLedger errata_ledger(int nmax);

// The fixed-point-squared remark entry alone; the fixsq lemma suite
// attaches it to its output.
ErrataEntry sum_fix_sq_remark_entry();

}  // namespace permspec
