#pragma once

#include "sphpart/cli/config.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sphpart::cli {

struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Check {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct CommandResult {
  Json payload;
  std::vector<Table> tables;
  std::vector<Check> checks;

  void check(std::string name, bool pass, std::string detail = {}) {
    checks.push_back({std::move(name), pass, std::move(detail)});
  }
  bool all_passed() const;
};

CommandResult cmd_bipar(const RunConfig& config);
CommandResult cmd_dims(const RunConfig& config);
CommandResult cmd_decomp(const RunConfig& config);
CommandResult cmd_rank(const RunConfig& config);
CommandResult cmd_schur_weyl(const RunConfig& config);
CommandResult cmd_verify(const RunConfig& config);

/// Suites accepted by verify, "all" excluded.
const std::vector<std::string>& verify_suites();

/// Envelope in the requested format; seconds is included only when given.
std::string render(const RunConfig& config, const CommandResult& result, std::optional<double> seconds);

struct Outcome {
  std::string output;
  int exit_code = 0;  // 0 all checks passed, 1 some check failed
  bool from_cache = false;
};

/// Dispatches on config.subcommand, going through the result cache when it
/// is enabled. UsageError and std::invalid_argument propagate.
Outcome execute(const RunConfig& config);

}  // namespace sphpart::cli
