#pragma once

#include "permspec/characters.hpp"

namespace permspec {

// Character table with an optional on-disk memo: when `cache_dir` is
// non-empty, the table for degree n is stored there as JSON and reused on
// later runs. Falls back to recomputation on any read problem.
CharacterTable character_table_cached(int n, const std::string& cache_dir);

}  // namespace permspec
