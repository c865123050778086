#pragma once

namespace permspec {

// Resource caps. These are configuration values, not algorithmic limits:
// every routine takes its bound from here (or from an explicit override)
// so a bigger machine can raise them in one place.
struct Caps {
  int max_enum_degree = 8;       // permutation enumeration (8! = 40320)
  int max_matrix_degree = 7;     // full n! x n! regular matrices (7! = 5040)
  int max_symbolic_degree = 5;   // polynomial-entry matrix products
  int max_convolve_degree = 4;   // group-algebra convolution, O((n!)^2)
  int max_certify_dimension = 720;  // exact rank work per certification
  int assignment_retries = 64;   // resampling budget for collision-free points
};

inline const Caps& default_caps() {
  static const Caps caps{};
  return caps;
}

}  // namespace permspec
