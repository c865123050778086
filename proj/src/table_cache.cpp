#include "permspec/table_cache.hpp"

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>

namespace permspec {

CharacterTable character_table_cached(int n, const std::string& cache_dir) {
  if (cache_dir.empty()) return character_table(n);
  const std::filesystem::path path =
      std::filesystem::path(cache_dir) / ("character_table_" + std::to_string(n) + ".json");

  if (std::filesystem::exists(path)) {
    try {
      std::ifstream in(path);
      nlohmann::json j;
      in >> j;
      if (j.at("n").get<int>() == n) {
        CharacterTable t;
        t.n = n;
        for (const auto& parts : j.at("partitions"))
          t.parts.push_back(Partition(parts.get<std::vector<int>>()));
        t.chi = j.at("chi").get<std::vector<std::vector<long long>>>();
        t.dims = j.at("dims").get<std::vector<long long>>();
        t.sizes = j.at("class_sizes").get<std::vector<long long>>();
        if (t.parts.size() == t.chi.size()) return t;
      }
    } catch (const std::exception&) {
      // corrupt or stale cache entry: recompute below
    }
  }

  CharacterTable t = character_table(n);
  std::error_code ec;
  std::filesystem::create_directories(cache_dir, ec);
  if (!ec) {
    nlohmann::json j;
    j["n"] = t.n;
    nlohmann::json parts = nlohmann::json::array();
    for (const Partition& p : t.parts) parts.push_back(p.parts);
    j["partitions"] = std::move(parts);
    j["chi"] = t.chi;
    j["dims"] = t.dims;
    j["class_sizes"] = t.sizes;
    std::ofstream out(path);
    out << j.dump();
  }
  return t;
}

}  // namespace permspec
