#include "sphpart/cli/cache.hpp"

#include "sphpart/json_io.hpp"

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>

namespace sphpart::cli {

namespace {

// FNV-1a: stable across platforms and runs, unlike std::hash.
std::string key_digest(const std::string& key) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream out;
  out << std::hex << h;
  return out.str();
}

}  // namespace

std::filesystem::path ResultCache::path_for(const std::string& key) const {
  return dir_ / (key_digest(key) + ".json");
}

std::optional<CachedResult> ResultCache::load(const std::string& key) const {
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  try {
    const Json entry = Json::parse(in);
    if (entry.at("key").get<std::string>() != key) return std::nullopt;
    return CachedResult{entry.at("output").get<std::string>(), entry.at("exit_code").get<int>()};
  } catch (const std::exception&) {
    return std::nullopt;  // unreadable or truncated entry
  }
}

void ResultCache::store(const std::string& key, const CachedResult& result) const {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec) return;
  Json entry;
  entry["key"] = key;
  entry["exit_code"] = result.exit_code;
  entry["output"] = result.output;

  const auto target = path_for(key);
  std::random_device rd;
  const auto tmp = dir_ / (target.filename().string() + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return;
    out << entry.dump();
    if (!out.flush()) {
      std::filesystem::remove(tmp, ec);
      return;
    }
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) std::filesystem::remove(tmp, ec);
}

}  // namespace sphpart::cli
