#include "sphpart/algebra.hpp"
#include "sphpart/cli/commands.hpp"
#include "sphpart/pairing.hpp"
#include "sphpart/schur_weyl.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace sphpart::cli {

namespace {

struct Suite {
  const char* name;
  int default_max_k;
  int limit;  // largest max-k accepted without --allow-long
  void (*run)(const RunConfig&, int max_k, CommandResult&);
};

std::string eq(const BigInt& a, const BigInt& b) { return sphpart::to_string(a) + (a == b ? " = " : " != ") + sphpart::to_string(b); }

void bp_identity(const RunConfig& config, int max_k, CommandResult& r) {
  for (int k = 1; k <= max_k; ++k) {
    BigInt squares = 0;
    for (const auto& lambda : LabeledPoset(k, PosetKind::Spherical).elements()) {
      const BigInt d = sph_cell_dim(k, lambda);
      squares += d * d;
    }
    const BigInt bp = bipartition_count(k);
    std::string detail = "k = " + std::to_string(k) + ": " + eq(squares, bp);
    bool pass = squares == bp;
    if (k <= config.bounds.enumeration_k) {
      const BigInt listed(enumerate_bipartitions(k).size());
      pass = pass && listed == bp;
      detail += ", enumerated " + sphpart::to_string(listed);
    }
    r.check("bp-identity k=" + std::to_string(k), pass, detail);
  }
}

void rank(const RunConfig&, int max_k, CommandResult& r) {
  for (int k = 1; k <= max_k; ++k) {
    const int got = rank_at(spherical_basis(k), Rational(2 * k + 1));
    const BigInt bp = bipartition_count(k);
    r.check("rank k=" + std::to_string(k), BigInt(got) == bp,
            "rank at t = " + std::to_string(2 * k + 1) + ": " + eq(BigInt(got), bp));
  }
}

void aitken_kostka(const RunConfig& config, int max_k, CommandResult& r) {
  const int max_n = config.max_n.value_or(max_k);
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 0; k <= max_k; ++k) {
      int checked = 0, bad = 0;
      std::string first_bad;
      for (const auto& lambda : enumerate_partitions(n)) {
        BigInt sum = 0;
        for (const auto& nu : enumerate_partitions(k, n)) sum += kostka(lambda, phi(nu, n));
        const BigInt a = aitken_coefficient(lambda, k);
        const bool zero_rule = (a == 0) == (k < partition_stats(lambda).b);
        ++checked;
        if (a != sum || !zero_rule) {
          ++bad;
          if (first_bad.empty()) first_bad = lambda.to_string() + ": " + eq(a, sum);
        }
      }
      r.check("aitken-kostka n=" + std::to_string(n) + " k=" + std::to_string(k), bad == 0,
              std::to_string(checked) + " partitions" + (bad ? ", first mismatch " + first_bad : ""));
    }
  }
}

void centralizer(const RunConfig& config, int max_k, CommandResult& r) {
  for (int k = 1; k <= max_k; ++k) {
    const int max_n = config.max_n.value_or(2 * k + 2);
    const BigInt bp = bipartition_count(k);
    for (int n = 1; n <= max_n; ++n) {
      const BigInt c = centralizer_dim(k, n);
      BigInt squares = 0;
      for (const auto& lambda : par_sph(k, n)) {
        const BigInt g = g_dim(k, n, lambda);
        squares += g * g;
      }
      bool pass = c == squares;
      std::string detail = "centralizer " + eq(c, squares) + " (sum of g squared)";
      if (n >= 2 * k) {
        pass = pass && c == bp;
        detail += ", bp_k " + sphpart::to_string(bp);
      }
      r.check("centralizer k=" + std::to_string(k) + " n=" + std::to_string(n), pass, detail);
    }
  }
}

void conjecture(const RunConfig& config, int max_k, CommandResult& r) {
  for (int k = 1; k <= max_k; ++k) {
    const int max_n = config.max_n.value_or(2 * k);
    for (int n = 1; n <= max_n; ++n) {
      int mismatches = 0;
      std::string listing;
      const auto rows = conjecture_check(k, n);
      for (const auto& row : rows) {
        if (row.equal) continue;
        ++mismatches;
        listing += " " + row.lambda.to_string() + ":" + sphpart::to_string(row.g_dim) + "/" + sphpart::to_string(row.simple_dim);
      }
      r.check("conjecture k=" + std::to_string(k) + " n=" + std::to_string(n), mismatches == 0,
              std::to_string(rows.size()) + " rows, " + std::to_string(mismatches) + " mismatches" + listing);
    }
  }
}

void rsk(const RunConfig&, int max_k, CommandResult& r) {
  // The spelled-out instance: five matrices with margins (3,2) and (2,2,1).
  const BigInt five = count_matrices(Partition{3, 2}, Partition{2, 2, 1});
  r.check("rsk instance (3,2) x (2,2,1)", five == 5, eq(five, 5));

  std::map<int, std::vector<Partition>> by_length;
  for (int size = 0; size <= max_k; ++size) {
    for (const auto& mu : enumerate_partitions(size)) by_length[mu.length()].push_back(mu);
  }
  for (const auto& [l, shapes] : by_length) {
    int pairs = 0, bad = 0;
    std::string first_bad;
    for (const auto& mu : shapes) {
      for (const auto& nu : shapes) {
        const Partition a = psi(mu), b = psi(nu);
        BigInt sum = 0;
        for (const auto& lambda : enumerate_partitions(l)) sum += kostka(lambda, a) * kostka(lambda, b);
        const BigInt direct = count_matrices(a, b);
        ++pairs;
        if (sum != direct) {
          ++bad;
          if (first_bad.empty()) first_bad = mu.to_string() + " x " + nu.to_string() + ": " + eq(sum, direct);
        }
      }
    }
    r.check("rsk length " + std::to_string(l), bad == 0,
            std::to_string(pairs) + " pairs" + (bad ? ", first mismatch " + first_bad : ""));
  }
}

void pairing(const RunConfig&, int max_k, CommandResult& r) {
  for (int k = 1; k <= max_k; ++k) {
    bool positive = true, linear = true, sign_rule = true;
    std::string values;
    for (const auto& lambda : LabeledPoset(k, PosetKind::Spherical).elements()) {
      const auto c = pairing_coefficient(k, lambda, std::max(k, kDefaultSymmetrizerBound));
      values += " " + lambda.to_string() + ":" + c.to_string();
      if (c.degree() > 1) linear = false;
      for (int t = 1; t <= 2 * k - 2; ++t) {
        if (c.evaluate(Rational(t)) <= 0) positive = false;
      }
      if ((c.coefficient(1) > 0) != !lambda.empty()) sign_rule = false;
    }
    const std::string ks = std::to_string(k);
    r.check("pairing k=" + ks + " positive on 1..2k-2", positive, values.substr(1));
    r.check("pairing k=" + ks + " degree at most one", linear);
    r.check("pairing k=" + ks + " linear coefficient positive exactly for nonempty lambda", sign_rule, values.substr(1));
  }
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {"bp-identity", 10, 12, bp_identity}, {"rank", 4, 5, rank},         {"aitken-kostka", 7, 8, aitken_kostka},
      {"centralizer", 5, 6, centralizer},   {"conjecture", 6, 8, conjecture}, {"rsk", 6, 7, rsk},
      {"pairing", 4, 4, pairing},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

CommandResult cmd_verify(const RunConfig& config) {
  std::vector<const Suite*> selected;
  for (const auto& s : suites()) {
    if (config.suite == "all" || config.suite == s.name) selected.push_back(&s);
  }
  if (selected.empty()) {
    std::string known = "all";
    for (const auto& s : suites()) known += std::string(", ") + s.name;
    throw UsageError("unknown suite '" + config.suite + "' (expected one of " + known + ")");
  }
  if (config.max_k && *config.max_k < 0) throw UsageError("--max-k must be nonnegative");
  if (config.max_n && *config.max_n < 1) throw UsageError("--max-n must be at least 1");

  CommandResult r;
  r.payload["suite"] = config.suite;
  r.payload["suites"] = Json::array();
  for (const Suite* s : selected) {
    const int max_k = config.max_k.value_or(s->default_max_k);
    config.require_within(max_k, s->limit, std::string(s->name) + " max-k");
    const std::size_t before = r.checks.size();
    s->run(config, max_k, r);
    Json entry;
    entry["name"] = s->name;
    entry["max_k"] = max_k;
    int failed = 0;
    for (std::size_t i = before; i < r.checks.size(); ++i) failed += !r.checks[i].pass;
    entry["passed"] = static_cast<int>(r.checks.size() - before) - failed;
    entry["failed"] = failed;
    r.payload["suites"].push_back(std::move(entry));
  }
  return r;
}

}  // namespace sphpart::cli
