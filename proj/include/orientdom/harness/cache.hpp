#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "orientdom/graph.hpp"

namespace orientdom::harness {

// Bumped whenever a solver change could alter cached DOM values.
inline constexpr const char* kSolverVersion = "orientdom-dom-1";

// Environment variable naming the cache directory when --cache-dir is absent.
inline constexpr const char* kCacheDirEnv = "ORIENTDOM_CACHE_DIR";

// Line-oriented DOM cache, one "hash<TAB>value<TAB>version" line per entry in
// <dir>/dom-cache.tsv. Keys hash the labeled graph (order plus canonical edge
// list), so relabeled isomorphic graphs miss. Corrupt lines are skipped and
// reported through warnings().
class DomCache {
 public:
  explicit DomCache(std::filesystem::path dir, std::string version = kSolverVersion);

  static std::string key(const UndirectedGraph& g);

  std::optional<std::size_t> lookup(const UndirectedGraph& g);
  void store(const UndirectedGraph& g, std::size_t value);

  const std::filesystem::path& file() const { return file_; }
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  std::filesystem::path file_;
  std::string version_;
  std::vector<std::string> warnings_;
};

}  // namespace orientdom::harness
