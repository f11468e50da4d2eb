#include "sphpart/dimensions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace sphpart {

std::string to_string(PosetKind kind) { return kind == PosetKind::Full ? "full" : "spherical"; }

PosetKind parse_poset_kind(const std::string& text) {
  if (text == "full") return PosetKind::Full;
  if (text == "spherical") return PosetKind::Spherical;
  throw std::invalid_argument("unknown poset kind '" + text + "'");
}

bool in_full_poset(int k, const Partition& lambda) { return lambda.order() <= k; }

bool in_spherical_poset(int k, const Partition& lambda) { return partition_stats(lambda).bbar <= k; }

LabeledPoset::LabeledPoset(int k, PosetKind kind) : k_(k), kind_(kind) {
  if (k < 1) throw std::invalid_argument("poset: k must be positive");
  for (int l = 0; l <= k; ++l) {
    for (auto& lambda : enumerate_partitions(l)) {
      if (kind == PosetKind::Full || in_spherical_poset(k, lambda)) elements_.push_back(std::move(lambda));
    }
  }
}

bool LabeledPoset::contains(const Partition& lambda) const {
  return kind_ == PosetKind::Full ? in_full_poset(k_, lambda) : in_spherical_poset(k_, lambda);
}

std::optional<int> LabeledPoset::index_of(const Partition& lambda) const {
  auto it = std::find(elements_.begin(), elements_.end(), lambda);
  if (it == elements_.end()) return std::nullopt;
  return static_cast<int>(it - elements_.begin());
}

bool LabeledPoset::less(const Partition& lambda, const Partition& mu) const {
  if (lambda.order() != mu.order()) return lambda.order() > mu.order();
  return lambda != mu && dominance_leq(lambda, mu);
}

LabeledPoset build_poset(int k, PosetKind kind) { return LabeledPoset(k, kind); }

std::vector<Partition> par_sph(int k, int n) {
  std::vector<Partition> out;
  for (auto& lambda : enumerate_partitions(n)) {
    if (partition_stats(lambda).b <= k) out.push_back(std::move(lambda));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

class StirlingTable {
 public:
  BigInt get(int n, int p) {
    if (n < 0 || p < 0) throw std::invalid_argument("stirling2: negative argument");
    if (p > n) return 0;
    std::lock_guard lock(mutex_);
    while (static_cast<int>(rows_.size()) <= n) {
      const int m = static_cast<int>(rows_.size());
      std::vector<BigInt> row(m + 1, BigInt(0));
      if (m == 0) {
        row[0] = 1;
      } else {
        const auto& prev = rows_.back();
        for (int q = 1; q <= m; ++q) row[q] = BigInt(q) * (q < m ? prev[q] : BigInt(0)) + prev[q - 1];
      }
      rows_.push_back(std::move(row));
    }
    return rows_[n][p];
  }

 private:
  std::mutex mutex_;
  std::vector<std::vector<BigInt>> rows_;
};

StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

void require_in_lambda_k(int k, const Partition& lambda, const char* who) {
  if (lambda.order() > k) {
    throw std::invalid_argument(std::string(who) + ": " + lambda.to_string() + " is not in Lambda^" +
                                std::to_string(k));
  }
}

}  // namespace

BigInt stirling2(int n, int p) { return stirling_table().get(n, p); }

BigInt bell(int n) {
  BigInt total = 0;
  for (int p = 0; p <= n; ++p) total += stirling2(n, p);
  return total;
}

BigInt cell_dim(int k, const Partition& lambda) {
  require_in_lambda_k(k, lambda, "cell_dim");
  const int l = lambda.order();
  BigInt sets = 0;
  for (int p = l; p <= k; ++p) sets += stirling2(k, p) * binomial(p, l);
  return std_count(lambda) * sets;
}

BigInt sph_cell_dim(int k, const Partition& lambda) {
  require_in_lambda_k(k, lambda, "sph_cell_dim");
  const int l = lambda.order();
  BigInt total = 0;
  for (int i = l; i <= k; ++i) {
    // Group the nu |- i with l parts by Psi(nu) so each Kostka number is
    // evaluated once.
    std::map<Partition, long> by_psi;
    for (const auto& nu : enumerate_partitions(i)) {
      if (nu.length() == l) ++by_psi[psi(nu)];
    }
    if (by_psi.empty()) continue;
    BigInt inner = 0;
    for (const auto& [alpha, count] : by_psi) inner += BigInt(count) * kostka(lambda, alpha);
    total += inner * partition_count(k - i);
  }
  return total;
}

BigInt aitken_coefficient(const Partition& lambda, int k) {
  if (lambda.empty()) throw std::invalid_argument("aitken_coefficient: empty partition");
  if (k < 0) return 0;
  const auto stats = partition_stats(lambda);
  if (stats.b > k) return 0;
  const int degree = k - static_cast<int>(stats.b);
  std::vector<BigInt> series(degree + 1, BigInt(0));
  series[0] = 1;
  for (int h : stats.hooks) {
    for (int d = h; d <= degree; ++d) series[d] += series[d - h];
  }
  return series[degree];
}

BigInt g_dim(int k, int n, const Partition& lambda) {
  if (lambda.order() != n) {
    throw std::invalid_argument("g_dim: " + lambda.to_string() + " is not a partition of n = " + std::to_string(n));
  }
  const long b = partition_stats(lambda).b;
  if (b > k) {
    throw std::invalid_argument("g_dim: b" + lambda.to_string() + " = " + std::to_string(b) + " exceeds k = " +
                                std::to_string(k) + "; G_k(lambda) is not defined");
  }
  BigInt total = 0;
  for (const auto& nu : enumerate_partitions(k, n)) total += kostka(lambda, phi(nu, n));
  return total;
}

std::string to_string(Semisimplicity s) {
  switch (s) {
    case Semisimplicity::Semisimple:
      return "semisimple";
    case Semisimplicity::NotSemisimple:
      return "not semisimple";
    case Semisimplicity::Unknown:
      return "unknown";
  }
  return "unknown";
}

Semisimplicity is_semisimple(int k, const Rational& t, bool spherical) {
  if (k < 1) throw std::invalid_argument("is_semisimple: k must be positive");
  const bool bad = denominator(t) == 1 && t >= 0 && t <= 2 * k - 2;
  if (!bad) return Semisimplicity::Semisimple;
  if (spherical && t == 0) return Semisimplicity::Unknown;
  return Semisimplicity::NotSemisimple;
}

}  // namespace sphpart
