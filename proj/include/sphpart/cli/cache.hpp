#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace sphpart::cli {

struct CachedResult {
  std::string output;
  int exit_code = 0;
};

/// One file per key. The full key is stored next to the output and compared
/// on load, so a hash collision reads as a miss rather than a wrong answer.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::optional<CachedResult> load(const std::string& key) const;
  /// Writes to a temporary file and renames it into place. I/O failures are
  /// swallowed: a cache that cannot be written is just a slower run.
  void store(const std::string& key, const CachedResult& result) const;

  const std::filesystem::path& dir() const noexcept { return dir_; }
  std::filesystem::path path_for(const std::string& key) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace sphpart::cli
