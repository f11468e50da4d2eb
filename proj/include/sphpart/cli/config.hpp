#pragma once

#include "sphpart/dimensions.hpp"
#include "sphpart/json_io.hpp"

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

namespace sphpart::cli {

inline constexpr const char* kToolVersion = "0.1.0";

/// Exit code 2: malformed request or a bound exceeded.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Json, Csv, Text };
std::string to_string(Format f);
Format parse_format(const std::string& text);

struct Bounds {
  int enumeration_k = 8;
  int rank_k = 5;
  int conjecture_k = 8;
};

struct RunConfig {
  std::string subcommand;
  int k = 1;
  std::optional<int> n;
  std::optional<std::string> t;  // exact rational text, validated by parse_rational
  PosetKind kind = PosetKind::Full;
  Format format = Format::Json;
  std::string suite = "all";
  std::optional<int> max_k;
  std::optional<int> max_n;
  bool count_only = false;
  bool gg = false;
  bool schur_weyl = false;
  bool allow_long = false;
  bool timing = false;
  bool use_cache = true;
  std::optional<std::filesystem::path> cache_dir;
  Bounds bounds;

  /// Everything that can change the output, in a fixed order. Cache
  /// placement and the timing flag are left out.
  Json canonical() const;

  /// Throws UsageError when value exceeds bound and allow_long is off.
  void require_within(int value, int bound, const std::string& what) const;
};

/// $SPHPART_CACHE_DIR, then $XDG_CACHE_HOME/sphpart, then $HOME/.cache/sphpart.
std::filesystem::path default_cache_dir();

}  // namespace sphpart::cli
