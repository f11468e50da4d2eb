// Command-line front end: parses flags into a RunConfig and hands it to the
// command layer. Exit codes: 0 ok, 1 a check failed, 2 usage or bound error,
// 3 unexpected internal error.

#include "sphpart/cli/commands.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

using sphpart::cli::RunConfig;

struct Flags {
  std::string t;
  std::string format = "json";
  std::string cache_dir;
  bool spherical = false;
  bool no_cache = false;
};

void add_flags(CLI::App& cmd, RunConfig& config, Flags& flags) {
  cmd.add_option("--k", config.k, "order of the algebra");
  cmd.add_option("--n", config.n, "parameter t = n, or the dimension of V_n");
  cmd.add_option("--t", flags.t, "exact rational parameter such as 7 or -3/2 (rank only)");
  cmd.add_flag("--spherical", flags.spherical, "use the spherical poset");
  cmd.add_option("--format", flags.format, "json, csv or text");
  cmd.add_flag("--count-only", config.count_only, "bipar: print bp_k only");
  cmd.add_flag("--gg", config.gg, "bipar: include the Garsia-Gessel view");
  cmd.add_flag("--schur-weyl", config.schur_weyl, "dims: add the Kostka / multiplicity table (needs --n)");
  cmd.add_option("--suite", config.suite, "verify: suite name or all");
  cmd.add_option("--max-k", config.max_k, "verify: largest k");
  cmd.add_option("--max-n", config.max_n, "verify: largest n");
  cmd.add_option("--cache-dir", flags.cache_dir, "result cache directory (default $SPHPART_CACHE_DIR)");
  cmd.add_flag("--no-cache", flags.no_cache, "neither read nor write the result cache");
  cmd.add_flag("--allow-long", config.allow_long, "lift the default size bounds");
  cmd.add_flag("--timing", config.timing, "report wall time (bypasses the cache)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for the partition algebra and its spherical subalgebra", "sphpart"};
  app.set_version_flag("--version", sphpart::cli::kToolVersion);
  app.require_subcommand(1);

  RunConfig config;
  Flags flags;
  const std::vector<std::pair<const char*, const char*>> subcommands{
      {"bipar", "list bipartite partitions of k"},
      {"dims", "cell module dimensions, optionally simple dimensions and the Schur-Weyl table"},
      {"decomp", "decomposition matrix, blocks, projective and tilting structure at t = n"},
      {"rank", "rank of the spherical diagram basis at an exact t"},
      {"schur-weyl", "the symmetric power S^k V_n as a permutation module"},
      {"verify", "run identity checks"},
  };
  for (const auto& [name, help] : subcommands) {
    auto* cmd = app.add_subcommand(name, help);
    add_flags(*cmd, config, flags);
    cmd->callback([&config, name = std::string(name)] { config.subcommand = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    config.kind = flags.spherical ? sphpart::PosetKind::Spherical : sphpart::PosetKind::Full;
    config.format = sphpart::cli::parse_format(flags.format);
    if (!flags.t.empty()) {
      sphpart::parse_rational(flags.t);  // reject malformed input before anything runs
      config.t = flags.t;
    }
    if (!flags.cache_dir.empty()) config.cache_dir = flags.cache_dir;
    config.use_cache = !flags.no_cache;

    const auto outcome = sphpart::cli::execute(config);
    std::cout << outcome.output;
    return outcome.exit_code;
  } catch (const sphpart::cli::UsageError& e) {
    std::cerr << "sphpart: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "sphpart: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "sphpart: internal error: " << e.what() << "\n";
    return 3;
  }
}
