#include "sphpart/cli/config.hpp"

#include <cstdlib>

namespace sphpart::cli {

std::string to_string(Format f) {
  switch (f) {
    case Format::Json:
      return "json";
    case Format::Csv:
      return "csv";
    case Format::Text:
      return "text";
  }
  return "json";
}

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "text") return Format::Text;
  throw UsageError("unknown format '" + text + "' (expected json, csv or text)");
}

Json RunConfig::canonical() const {
  Json out;
  out["subcommand"] = subcommand;
  out["k"] = k;
  out["n"] = n ? Json(*n) : Json(nullptr);
  out["t"] = t ? Json(sphpart::to_string(parse_rational(*t))) : Json(nullptr);
  out["poset"] = sphpart::to_string(kind);
  out["format"] = to_string(format);
  out["suite"] = subcommand == "verify" ? Json(suite) : Json(nullptr);
  out["max_k"] = max_k ? Json(*max_k) : Json(nullptr);
  out["max_n"] = max_n ? Json(*max_n) : Json(nullptr);
  out["count_only"] = count_only;
  out["gg"] = gg;
  out["schur_weyl"] = schur_weyl;
  return out;
}

void RunConfig::require_within(int value, int bound, const std::string& what) const {
  if (value > bound && !allow_long) {
    throw UsageError(what + " = " + std::to_string(value) + " exceeds the default bound " + std::to_string(bound) +
                     "; pass --allow-long to run it anyway");
  }
}

std::filesystem::path default_cache_dir() {
  if (const char* dir = std::getenv("SPHPART_CACHE_DIR"); dir && *dir) return dir;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "sphpart";
  if (const char* home = std::getenv("HOME"); home && *home) {
    return std::filesystem::path(home) / ".cache" / "sphpart";
  }
  return std::filesystem::temp_directory_path() / "sphpart-cache";
}

}  // namespace sphpart::cli
