#pragma once

#include <cstdint>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

namespace permspec {

struct PropertyReport {
  std::string name;
  long long instances = 0;
  bool pass = false;
  std::string detail;

  nlohmann::json to_json() const;
};

// Randomized and exhaustive property suites runnable standalone:
// group axioms, convolution/representation compatibility, rank metamorphic
// invariance, character orthogonality. Deterministic per seed.
std::vector<PropertyReport> run_property_suites(uint64_t seed);

}  // namespace permspec
