#include "sphpart/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace sphpart {

// ---------------------------------------------------------------------------
// Partition / Composition / Permutation

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  order_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("composition parts must be positive");
  }
  order_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Composition Composition::concat(const Composition& other) const {
  std::vector<int> joined = parts_;
  joined.insert(joined.end(), other.parts_.begin(), other.parts_.end());
  return Composition(std::move(joined));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size() + 1, false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) || seen[v]) {
      throw std::invalid_argument("not a permutation in one-line notation");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int size) {
  std::vector<int> images(size);
  std::iota(images.begin(), images.end(), 1);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (size() != other.size()) throw std::invalid_argument("permutation sizes differ");
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[other.images_[i] - 1];
  return Permutation(std::move(out));
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

void enumerate_rec(int remaining, int max_part, int parts_left, std::vector<int>& current,
                   std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (parts_left == 0) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    enumerate_rec(remaining - part, part, parts_left - 1, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int k, std::optional<int> max_parts) {
  if (k < 0) throw std::invalid_argument("enumerate_partitions: k must be nonnegative");
  if (max_parts && *max_parts < 0) throw std::invalid_argument("enumerate_partitions: negative part bound");
  std::vector<Partition> out;
  std::vector<int> current;
  enumerate_rec(k, k, max_parts.value_or(k), current, out);
  return out;
}

BigInt partition_count(int k) {
  if (k < 0) return 0;
  // Bounded-part recurrence over the table p(n, largest part <= m).
  std::vector<BigInt> ways(k + 1, BigInt(0));
  ways[0] = 1;
  for (int part = 1; part <= k; ++part) {
    for (int n = part; n <= k; ++n) ways[n] += ways[n - part];
  }
  return ways[k];
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.order() != mu.order()) {
    throw std::invalid_argument("dominance_leq: partitions of different orders " + lambda.to_string() +
                                " and " + mu.to_string());
  }
  int sum_l = 0, sum_m = 0;
  const int len = std::max(lambda.length(), mu.length());
  for (int i = 0; i < len; ++i) {
    sum_l += lambda.row(i);
    sum_m += mu.row(i);
    if (sum_l > sum_m) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Kostka numbers

namespace {

// Fill the largest remaining entry as a horizontal strip removed from the
// outer rim: column strictness forces every copy of the largest value into
// distinct columns at the ends of rows.
class KostkaMemo {
 public:
  BigInt get(const std::vector<int>& shape, const std::vector<int>& content) {
    if (content.empty()) return shape.empty() ? BigInt(1) : BigInt(0);
    auto key = std::make_pair(shape, content);
    {
      std::lock_guard lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    const int strip = content.back();
    std::vector<int> rest_content(content.begin(), content.end() - 1);
    BigInt total = 0;
    std::vector<int> inner = shape;
    remove_strip(shape, inner, 0, strip, rest_content, total);
    std::lock_guard lock(mutex_);
    table_.emplace(std::move(key), total);
    return total;
  }

 private:
  // Remove r_i boxes from the end of row i, with shape[i+1] <= inner[i]
  // (horizontal strip) and the strip size summing to `remaining`.
  void remove_strip(const std::vector<int>& shape, std::vector<int>& inner, std::size_t row,
                    int remaining, const std::vector<int>& rest_content, BigInt& total) {
    if (row == shape.size()) {
      if (remaining != 0) return;
      std::vector<int> trimmed = inner;
      while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
      // A semistandard filling with values 1..m has at most m rows.
      if (static_cast<int>(trimmed.size()) > static_cast<int>(rest_content.size())) return;
      total += get(trimmed, rest_content);
      return;
    }
    const int below = row + 1 < shape.size() ? shape[row + 1] : 0;
    const int max_remove = std::min(shape[row] - below, remaining);
    // Boxes still removable further down bound what this row must take.
    int capacity_below = 0;
    for (std::size_t r = row + 1; r < shape.size(); ++r) {
      capacity_below += shape[r] - (r + 1 < shape.size() ? shape[r + 1] : 0);
    }
    const int min_remove = std::max(0, remaining - capacity_below);
    for (int take = min_remove; take <= max_remove; ++take) {
      inner[row] = shape[row] - take;
      remove_strip(shape, inner, row + 1, remaining - take, rest_content, total);
    }
    inner[row] = shape[row];
  }

  std::mutex mutex_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> table_;
};

KostkaMemo& kostka_memo() {
  static KostkaMemo memo;
  return memo;
}

}  // namespace

BigInt kostka(const Partition& lambda, const Composition& mu) {
  if (lambda.order() != mu.order()) {
    throw std::invalid_argument("kostka: |lambda| = " + std::to_string(lambda.order()) +
                                " differs from |mu| = " + std::to_string(mu.order()));
  }
  // Invariant under reordering mu; the memo is keyed on the sorted content.
  std::vector<int> content = mu.parts();
  std::sort(content.begin(), content.end(), std::greater<>());
  return kostka_memo().get(lambda.parts(), content);
}

// ---------------------------------------------------------------------------
// Statistics, Phi, Psi, standard tableaux

PartitionStats partition_stats(const Partition& lambda) {
  PartitionStats stats;
  const auto& parts = lambda.parts();
  for (int i = 0; i < lambda.length(); ++i) {
    stats.b += static_cast<long>(i) * parts[i];
    stats.bbar += static_cast<long>(i + 1) * parts[i];
    for (int j = 0; j < parts[i]; ++j) {
      int leg = 0;
      for (int r = i + 1; r < lambda.length() && parts[r] > j; ++r) ++leg;
      stats.hooks.push_back(parts[i] - j - 1 + leg + 1);
    }
  }
  return stats;
}

namespace {

std::vector<int> multiplicities(const Partition& nu) {
  std::vector<int> mult;
  const auto& parts = nu.parts();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i == 0 || parts[i] != parts[i - 1]) mult.push_back(0);
    ++mult.back();
  }
  return mult;
}

}  // namespace

Partition phi(const Partition& nu, int n) {
  if (nu.length() > n) {
    throw std::invalid_argument("phi: " + nu.to_string() + " has more than n = " + std::to_string(n) + " parts");
  }
  std::vector<int> mult = multiplicities(nu);
  mult.push_back(n - nu.length());  // dropped by from_unsorted when zero
  return Partition::from_unsorted(std::move(mult));
}

Partition psi(const Partition& nu) { return Partition::from_unsorted(multiplicities(nu)); }

BigInt std_count(const Partition& lambda) {
  BigInt denom = 1;
  for (int h : partition_stats(lambda).hooks) denom *= h;
  return factorial(lambda.order()) / denom;
}

Partition restrict_first_row(const Partition& lambda) {
  if (lambda.empty()) throw std::invalid_argument("restrict_first_row: empty partition");
  return Partition(std::vector<int>(lambda.parts().begin() + 1, lambda.parts().end()));
}

BigInt multinomial(int n, std::span<const int> parts) {
  long sum = 0;
  for (int p : parts) {
    if (p < 0) throw std::invalid_argument("multinomial: negative part");
    sum += p;
  }
  if (sum != n) {
    throw std::invalid_argument("multinomial: parts sum to " + std::to_string(sum) + ", expected " +
                                std::to_string(n));
  }
  BigInt result = factorial(n);
  for (int p : parts) result /= factorial(p);
  return result;
}

}  // namespace sphpart
