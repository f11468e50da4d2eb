#include "sphpart/cli/commands.hpp"

#include "sphpart/algebra.hpp"
#include "sphpart/cli/cache.hpp"
#include "sphpart/schur_weyl.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace sphpart::cli {

bool CommandResult::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

std::string str(const BigInt& v) { return sphpart::to_string(v); }

std::string check_detail(const BigInt& got, const BigInt& expected) {
  return str(got) + (got == expected ? " = " : " != ") + str(expected);
}

int require_n(const RunConfig& config, const char* who) {
  if (!config.n) throw UsageError(std::string(who) + " needs --n");
  return *config.n;
}

void require_positive_k(const RunConfig& config) {
  if (config.k < 1) throw UsageError("--k must be at least 1");
}

}  // namespace

// ---------------------------------------------------------------------------

CommandResult cmd_bipar(const RunConfig& config) {
  if (config.k < 0) throw UsageError("--k must be nonnegative");
  CommandResult r;
  Json& p = r.payload;
  p["k"] = config.k;
  if (config.count_only) {
    const BigInt count = bipartition_count(config.k);
    p["count"] = to_json(count);
    r.tables.push_back({"bipartite partitions", {"k", "count"}, {{std::to_string(config.k), str(count)}}});
    if (config.k <= config.bounds.enumeration_k) {
      const BigInt listed(enumerate_bipartitions(config.k).size());
      r.check("enumeration agrees with the generating function", listed == count, check_detail(listed, count));
    }
    return r;
  }
  config.require_within(config.k, config.bounds.enumeration_k, "k");
  const auto all = enumerate_bipartitions(config.k);
  p["count"] = all.size();
  p["bipartitions"] = Json::array();
  Table t{"bipartite partitions of " + std::to_string(config.k), {"index", "normal_form"}, {}};
  if (config.gg) {
    t.header.insert(t.header.end(), {"lambda_top_pro", "lambda_bot_pro", "sigma", "nonprop_top", "nonprop_bot"});
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    std::vector<std::string> row{std::to_string(i), all[i].to_string()};
    if (config.gg) {
      const auto gg = gg_form(all[i]);
      Json entry;
      entry["normal_form"] = to_json(all[i]);
      entry["gg"] = to_json(gg);
      p["bipartitions"].push_back(std::move(entry));
      std::string sigma = "(";
      for (int j = 0; j < gg.sigma.size(); ++j) sigma += (j ? "," : "") + std::to_string(gg.sigma.images()[j]);
      row.insert(row.end(), {gg.lambda_top_pro.to_string(), gg.lambda_bot_pro.to_string(), sigma + ")",
                             gg.nonprop_top.to_string(), gg.nonprop_bot.to_string()});
    } else {
      p["bipartitions"].push_back(to_json(all[i]));
    }
    t.rows.push_back(std::move(row));
  }
  r.tables.push_back(std::move(t));
  const BigInt count = bipartition_count(config.k);
  r.check("enumeration agrees with the generating function", BigInt(all.size()) == count,
          check_detail(BigInt(all.size()), count));
  return r;
}

// ---------------------------------------------------------------------------

CommandResult cmd_dims(const RunConfig& config) {
  require_positive_k(config);
  config.require_within(config.k, config.bounds.enumeration_k, "k");
  const int k = config.k;
  const LabeledPoset poset(k, config.kind);
  const bool spherical = config.kind == PosetKind::Spherical;

  CommandResult r;
  Json& p = r.payload;
  p["k"] = k;
  p["poset"] = to_string(config.kind);
  p["labels"] = Json::array();
  p["cell_dims"] = Json::array();
  BigInt squares = 0;
  std::vector<BigInt> dims;
  for (const auto& lambda : poset.elements()) {
    const BigInt d = spherical ? sph_cell_dim(k, lambda) : cell_dim(k, lambda);
    p["labels"].push_back(to_json(lambda));
    p["cell_dims"].push_back(to_json(d));
    squares += d * d;
    dims.push_back(d);
  }
  p["sum_of_squares"] = to_json(squares);
  const BigInt expected = spherical ? bipartition_count(k) : bell(2 * k);
  r.check(spherical ? "sum of squares equals bp_k" : "sum of squares equals Bell(2k)", squares == expected,
          check_detail(squares, expected));

  Table t{std::string(spherical ? "spherical" : "full") + " cell dimensions, k = " + std::to_string(k),
          {"label", "cell_dim"},
          {}};
  std::optional<DecompositionReport> report;
  if (config.n) {
    if (*config.n == 0) throw UsageError("simple dimensions at t = 0 are out of scope");
    report = decomposition_report(k, *config.n, config.kind);
    p["n"] = *config.n;
    p["simple_dims"] = Json::array();
    for (const auto& d : report->simple_dims) p["simple_dims"].push_back(to_json(d));
    t.header.push_back("simple_dim");
  }
  for (int i = 0; i < poset.size(); ++i) {
    std::vector<std::string> row{poset.elements()[i].to_string(), str(dims[i])};
    if (report) row.push_back(str(report->simple_dims[i]));
    t.rows.push_back(std::move(row));
  }
  r.tables.push_back(std::move(t));

  if (config.schur_weyl) {
    const int n = require_n(config, "dims --schur-weyl");
    if (n < 1) throw UsageError("--n must be at least 1 for the Schur-Weyl table");
    Json sw;
    sw["n"] = n;
    const auto nus = enumerate_partitions(k, n);
    sw["columns"] = Json::array();
    Table ft{"Kostka numbers K(lambda, Phi(nu)), k = " + std::to_string(k) + ", n = " + std::to_string(n),
             {"lambda"},
             {}};
    for (const auto& nu : nus) {
      Json col;
      col["nu"] = to_json(nu);
      col["phi"] = to_json(phi(nu, n));
      sw["columns"].push_back(std::move(col));
      ft.header.push_back(phi(nu, n).to_string());
    }
    ft.header.insert(ft.header.end(), {"dim_S", "dim_G"});
    sw["rows"] = Json::array();
    BigInt g_squares = 0, weighted = 0;
    for (const auto& lambda : par_sph(k, n)) {
      Json row;
      row["lambda"] = to_json(lambda);
      row["kostka"] = Json::array();
      std::vector<std::string> cells{lambda.to_string()};
      BigInt g = 0;
      for (const auto& nu : nus) {
        const BigInt kk = kostka(lambda, phi(nu, n));
        g += kk;
        row["kostka"].push_back(to_json(kk));
        cells.push_back(str(kk));
      }
      const BigInt s = std_count(lambda);
      row["dim_S"] = to_json(s);
      row["dim_G"] = to_json(g);
      cells.insert(cells.end(), {str(s), str(g)});
      sw["rows"].push_back(std::move(row));
      ft.rows.push_back(std::move(cells));
      g_squares += g * g;
      weighted += s * g;
    }
    const BigInt sym = binomial(k + n - 1, k);
    const BigInt centralizer = centralizer_dim(k, n);
    sw["sum_dim_G_squared"] = to_json(g_squares);
    sw["sum_dim_S_dim_G"] = to_json(weighted);
    sw["dim_symmetric_power"] = to_json(sym);
    sw["centralizer_dim"] = to_json(centralizer);
    p["schur_weyl"] = std::move(sw);
    r.tables.push_back(std::move(ft));
    r.check("sum of dim G squared equals the centralizer dimension", g_squares == centralizer,
            check_detail(g_squares, centralizer));
    r.check("sum of dim S times dim G equals dim S^k V_n", weighted == sym, check_detail(weighted, sym));
  }
  return r;
}

// ---------------------------------------------------------------------------

CommandResult cmd_decomp(const RunConfig& config) {
  require_positive_k(config);
  config.require_within(config.k, config.bounds.enumeration_k, "k");
  const int n = require_n(config, "decomp");
  if (n == 0) throw UsageError("t = 0 is excluded: quasi-heredity at t = 0 is not covered, so decomp refuses n = 0");
  const auto report = decomposition_report(config.k, n, config.kind);
  const LabeledPoset poset(config.k, config.kind);

  CommandResult r;
  r.payload = to_json(report);
  const int size = static_cast<int>(report.labels.size());

  Table labels{"labels, k = " + std::to_string(config.k) + ", n = " + std::to_string(n) + ", " + to_string(config.kind),
               {"index", "label", "block", "cell_dim", "simple_dim"},
               {}};
  std::vector<int> block_of(size, -1);
  for (std::size_t b = 0; b < report.chains.size(); ++b) {
    for (int i : report.chains[b]) block_of[i] = static_cast<int>(b);
  }
  for (int i = 0; i < size; ++i) {
    labels.rows.push_back({std::to_string(i), report.labels[i].to_string(), std::to_string(block_of[i]),
                           str(report.cell_dims[i]), str(report.simple_dims[i])});
  }
  r.tables.push_back(std::move(labels));

  Table chains{"blocks (n-pair chains)", {"block", "chain"}, {}};
  for (std::size_t b = 0; b < report.chains.size(); ++b) {
    std::string chain;
    for (int i : report.chains[b]) chain += (chain.empty() ? "" : " -> ") + report.labels[i].to_string();
    chains.rows.push_back({std::to_string(b), chain});
  }
  r.tables.push_back(std::move(chains));

  Table matrix{"decomposition matrix [Delta(row) : L(column)]", {"label"}, {}};
  for (const auto& lambda : report.labels) matrix.header.push_back(lambda.to_string());
  for (int i = 0; i < size; ++i) {
    std::vector<std::string> row{report.labels[i].to_string()};
    for (int v : report.matrix[i]) row.push_back(std::to_string(v));
    matrix.rows.push_back(std::move(row));
  }
  r.tables.push_back(std::move(matrix));

  bool triangular = true, rebuilt_ok = true;
  for (int i = 0; i < size; ++i) {
    BigInt rebuilt = 0;
    for (int j = 0; j < size; ++j) {
      if (report.matrix[i][j] && i != j && !poset.less(report.labels[j], report.labels[i])) triangular = false;
      rebuilt += BigInt(report.matrix[i][j]) * report.simple_dims[j];
    }
    if (report.matrix[i][i] != 1) triangular = false;
    if (rebuilt != report.cell_dims[i]) rebuilt_ok = false;
  }
  r.check("matrix is unitriangular for the poset order", triangular);
  r.check("simple dimensions rebuild the cell dimensions", rebuilt_ok);
  return r;
}

// ---------------------------------------------------------------------------

CommandResult cmd_rank(const RunConfig& config) {
  require_positive_k(config);
  config.require_within(config.k, config.bounds.rank_k, "k");
  const Rational t = config.t ? parse_rational(*config.t) : Rational(2 * config.k + 1);
  const int rank = rank_at(spherical_basis(config.k), t);
  const BigInt bp = bipartition_count(config.k);

  CommandResult r;
  r.payload["k"] = config.k;
  r.payload["t"] = to_json(t);
  r.payload["bp"] = to_json(bp);
  r.payload["rank"] = rank;
  r.tables.push_back({"rank of the spherical basis",
                      {"k", "t", "rank", "bp"},
                      {{std::to_string(config.k), sphpart::to_string(t), std::to_string(rank), str(bp)}}});
  r.check("rank equals bp_k", BigInt(rank) == bp, check_detail(BigInt(rank), bp));
  return r;
}

// ---------------------------------------------------------------------------

CommandResult cmd_schur_weyl(const RunConfig& config) {
  require_positive_k(config);
  config.require_within(config.k, config.bounds.enumeration_k, "k");
  const int n = require_n(config, "schur-weyl");
  if (n < 1) throw UsageError("--n must be at least 1");
  config.require_within(n, 2 * config.bounds.enumeration_k + 2, "n");
  const int k = config.k;

  CommandResult r;
  Json& p = r.payload;
  p["k"] = k;
  p["n"] = n;
  const BigInt sym = binomial(k + n - 1, k);
  const BigInt monomials(monomial_basis(k, n).size());
  p["dim_symmetric_power"] = to_json(sym);
  p["monomial_count"] = to_json(monomials);
  r.check("monomial basis has C(k+n-1, k) elements", monomials == sym, check_detail(monomials, sym));

  p["summands"] = Json::array();
  Table st{"permutation module summands M(Phi(nu))", {"nu", "shape", "dim"}, {}};
  BigInt total = 0;
  const auto nus = enumerate_partitions(k, n);
  const auto summands = perm_decomposition(k, n);
  for (std::size_t i = 0; i < summands.size(); ++i) {
    Json s;
    s["nu"] = to_json(nus[i]);
    s["shape"] = to_json(summands[i].shape);
    s["dim"] = to_json(summands[i].dim);
    p["summands"].push_back(std::move(s));
    st.rows.push_back({nus[i].to_string(), summands[i].shape.to_string(), str(summands[i].dim)});
    total += summands[i].dim;
  }
  p["summand_total"] = to_json(total);
  r.tables.push_back(std::move(st));
  r.check("summand dimensions add up to dim S^k V_n", total == sym, check_detail(total, sym));

  p["multiplicities"] = Json::array();
  Table gt{"multiplicity spaces G_k(lambda)", {"lambda", "dim_S", "dim_G"}, {}};
  BigInt squares = 0;
  for (const auto& lambda : par_sph(k, n)) {
    const BigInt g = g_dim(k, n, lambda);
    Json m;
    m["lambda"] = to_json(lambda);
    m["dim_S"] = to_json(std_count(lambda));
    m["dim_G"] = to_json(g);
    p["multiplicities"].push_back(std::move(m));
    gt.rows.push_back({lambda.to_string(), str(std_count(lambda)), str(g)});
    squares += g * g;
  }
  r.tables.push_back(std::move(gt));
  const BigInt centralizer = centralizer_dim(k, n);
  p["centralizer_dim"] = to_json(centralizer);
  p["sum_dim_G_squared"] = to_json(squares);
  r.check("centralizer dimension equals the sum of dim G squared", centralizer == squares,
          check_detail(centralizer, squares));
  if (n >= 2 * k) {
    const BigInt bp = bipartition_count(k);
    r.check("centralizer dimension equals bp_k for n >= 2k", centralizer == bp, check_detail(centralizer, bp));
  }
  return r;
}

// ---------------------------------------------------------------------------

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const CommandResult& result) {
  std::ostringstream out;
  for (const auto& t : result.tables) {
    out << "# " << t.title << "\n";
    for (std::size_t i = 0; i < t.header.size(); ++i) out << (i ? "," : "") << csv_field(t.header[i]);
    out << "\n";
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
      out << "\n";
    }
  }
  out << "# checks\ncheck,pass,detail\n";
  for (const auto& c : result.checks) {
    out << csv_field(c.name) << "," << (c.pass ? "true" : "false") << "," << csv_field(c.detail) << "\n";
  }
  return out.str();
}

std::string render_text(const CommandResult& result) {
  std::ostringstream out;
  for (const auto& t : result.tables) {
    std::vector<std::size_t> width(t.header.size(), 0);
    for (std::size_t i = 0; i < t.header.size(); ++i) width[i] = t.header[i].size();
    for (const auto& row : t.rows) {
      for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t i = 0; i < cells.size(); ++i) {
        out << (i ? "  " : "") << cells[i];
        if (i + 1 < cells.size()) out << std::string(width[i] - cells[i].size(), ' ');
      }
      out << "\n";
    };
    out << t.title << "\n";
    line(t.header);
    for (const auto& row : t.rows) line(row);
    out << "\n";
  }
  for (const auto& c : result.checks) {
    out << (c.pass ? "[ok]   " : "[FAIL] ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
  return out.str();
}

}  // namespace

std::string render(const RunConfig& config, const CommandResult& result, std::optional<double> seconds) {
  switch (config.format) {
    case Format::Csv:
      return render_csv(result);
    case Format::Text:
      return render_text(result) + (seconds ? "time: " + std::to_string(*seconds) + " s\n" : "");
    case Format::Json:
      break;
  }
  Json envelope;
  envelope["tool"] = "sphpart";
  envelope["version"] = kToolVersion;
  envelope["config"] = config.canonical();
  envelope["payload"] = result.payload;
  envelope["checks"] = Json::array();
  for (const auto& c : result.checks) {
    Json entry;
    entry["name"] = c.name;
    entry["pass"] = c.pass;
    entry["detail"] = c.detail;
    envelope["checks"].push_back(std::move(entry));
  }
  if (seconds) envelope["timing"] = {{"seconds", *seconds}};
  return envelope.dump(2) + "\n";
}

Outcome execute(const RunConfig& config) {
  CommandResult (*run)(const RunConfig&) = nullptr;
  if (config.subcommand == "bipar") run = cmd_bipar;
  if (config.subcommand == "dims") run = cmd_dims;
  if (config.subcommand == "decomp") run = cmd_decomp;
  if (config.subcommand == "rank") run = cmd_rank;
  if (config.subcommand == "schur-weyl") run = cmd_schur_weyl;
  if (config.subcommand == "verify") run = cmd_verify;
  if (!run) throw UsageError("unknown subcommand '" + config.subcommand + "'");

  // Verify runs are always fresh, and timed runs must actually run.
  const bool cacheable = config.use_cache && !config.timing && config.subcommand != "verify";
  const std::string key = std::string(kToolVersion) + "\n" + config.canonical().dump();
  const ResultCache cache(config.cache_dir.value_or(default_cache_dir()));
  if (cacheable) {
    if (auto hit = cache.load(key)) return {hit->output, hit->exit_code, true};
  }

  const auto start = std::chrono::steady_clock::now();
  const CommandResult result = run(config);
  std::optional<double> seconds;
  if (config.timing) seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Outcome outcome{render(config, result, seconds), result.all_passed() ? 0 : 1, false};
  if (cacheable) cache.store(key, {outcome.output, outcome.exit_code});
  return outcome;
}

}  // namespace sphpart::cli
