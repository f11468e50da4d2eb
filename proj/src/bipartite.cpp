#include "sphpart/bipartite.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace sphpart {

namespace {

bool normal_order(const BiPart& a, const BiPart& b) {
  return a.top != b.top ? a.top > b.top : a.bottom > b.bottom;
}

}  // namespace

BiPartition BiPartition::normalize(std::vector<BiPart> parts) {
  int top = 0, bottom = 0;
  for (const auto& p : parts) {
    if (p.top < 0 || p.bottom < 0) throw std::invalid_argument("bipartite part with negative entry");
    if (p.top == 0 && p.bottom == 0) throw std::invalid_argument("bipartite part [0,0] is not allowed");
    top += p.top;
    bottom += p.bottom;
  }
  if (top != bottom) {
    throw std::invalid_argument("unbalanced bipartite partition: top sum " + std::to_string(top) +
                                " vs bottom sum " + std::to_string(bottom));
  }
  std::sort(parts.begin(), parts.end(), normal_order);
  BiPartition b;
  b.parts_ = std::move(parts);
  b.order_ = top;
  return b;
}

BiPartition normalize(std::vector<BiPart> parts) { return BiPartition::normalize(std::move(parts)); }

int BiPartition::propagating_parts() const noexcept {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                        [](const BiPart& p) { return p.top > 0 && p.bottom > 0; }));
}

std::string BiPartition::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ",";
    out += "[" + std::to_string(parts_[i].top) + "," + std::to_string(parts_[i].bottom) + "]";
  }
  return out + "}";
}

// ---------------------------------------------------------------------------

namespace {

// Parts are chosen in normal order (each part <= the previous one), which
// generates every multiset exactly once and already in normal form.
void enumerate_rec(int top_left, int bottom_left, BiPart bound, std::vector<BiPart>& current,
                   std::vector<BiPartition>& out) {
  if (top_left == 0 && bottom_left == 0) {
    out.push_back(BiPartition::normalize(current));
    return;
  }
  for (int x = std::min(top_left, bound.top); x >= 0; --x) {
    const int y_max = x == bound.top ? std::min(bottom_left, bound.bottom) : bottom_left;
    for (int y = y_max; y >= 0; --y) {
      if (x == 0 && y == 0) continue;
      // Once x hits 0 the remaining top sum must already be exhausted.
      if (x == 0 && top_left > 0) continue;
      current.push_back({x, y});
      enumerate_rec(top_left - x, bottom_left - y, {x, y}, current, out);
      current.pop_back();
    }
  }
}

}  // namespace

std::vector<BiPartition> enumerate_bipartitions(int k) {
  if (k < 0) throw std::invalid_argument("enumerate_bipartitions: k must be nonnegative");
  std::vector<BiPartition> out;
  std::vector<BiPart> current;
  enumerate_rec(k, k, {k, k}, current, out);
  return out;
}

BigInt bipartition_count(int k) {
  if (k < 0) throw std::invalid_argument("bipartition_count: k must be nonnegative");
  const int side = k + 1;
  std::vector<BigInt> series(side * side, BigInt(0));
  series[0] = 1;
  // One geometric factor per part type [a, b], multiplied in place.
  for (int a = 0; a <= k; ++a) {
    for (int b = 0; b <= k; ++b) {
      if (a == 0 && b == 0) continue;
      for (int x = a; x <= k; ++x) {
        for (int y = b; y <= k; ++y) series[x * side + y] += series[(x - a) * side + (y - b)];
      }
    }
  }
  return series[k * side + k];
}

// ---------------------------------------------------------------------------

GGForm gg_form(const BiPartition& b) {
  std::vector<int> top, bot, nonprop_top, nonprop_bot;
  std::vector<BiPart> prop;
  for (const auto& p : b.parts()) {
    if (p.top > 0) top.push_back(p.top);
    if (p.bottom > 0) bot.push_back(p.bottom);
    if (p.top > 0 && p.bottom > 0) {
      prop.push_back(p);
    } else if (p.top > 0) {
      nonprop_top.push_back(p.top);
    } else {
      nonprop_bot.push_back(p.bottom);
    }
  }

  // Bottom slots in order of bottom size; equal bottom sizes ordered by top
  // size descending, so their lines reach increasing top slots.
  std::stable_sort(prop.begin(), prop.end(), [](const BiPart& a, const BiPart& c) {
    return a.bottom != c.bottom ? a.bottom > c.bottom : a.top > c.top;
  });
  const int l = static_cast<int>(prop.size());

  // Top slots: group by top size (descending); inside a group, slots are
  // handed out in increasing order of bottom slot.
  std::vector<int> order(l);
  for (int i = 0; i < l; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int c) { return prop[a].top > prop[c].top; });
  std::vector<int> sigma(l);
  std::vector<int> top_pro(l), bot_pro(l);
  for (int slot = 0; slot < l; ++slot) {
    sigma[order[slot]] = slot + 1;
    top_pro[slot] = prop[order[slot]].top;
  }
  for (int i = 0; i < l; ++i) bot_pro[i] = prop[i].bottom;

  GGForm gg;
  gg.lambda_top = Partition::from_unsorted(std::move(top));
  gg.lambda_bot = Partition::from_unsorted(std::move(bot));
  gg.lambda_top_pro = Partition(std::move(top_pro));
  gg.lambda_bot_pro = Partition(std::move(bot_pro));
  gg.sigma = Permutation(std::move(sigma));
  gg.nonprop_top = Partition::from_unsorted(std::move(nonprop_top));
  gg.nonprop_bot = Partition::from_unsorted(std::move(nonprop_bot));
  return gg;
}

BiPartition from_gg_form(const GGForm& gg) {
  std::vector<BiPart> parts;
  const auto& top = gg.lambda_top_pro.parts();
  const auto& bot = gg.lambda_bot_pro.parts();
  for (int i = 0; i < gg.sigma.size(); ++i) parts.push_back({top.at(gg.sigma(i + 1) - 1), bot.at(i)});
  for (int x : gg.nonprop_top.parts()) parts.push_back({x, 0});
  for (int y : gg.nonprop_bot.parts()) parts.push_back({0, y});
  return BiPartition::normalize(std::move(parts));
}

bool is_sigma_compatible(const Partition& lambda, const Permutation& sigma) {
  if (lambda.length() != sigma.size()) {
    throw std::invalid_argument("is_sigma_compatible: length(lambda) = " + std::to_string(lambda.length()) +
                                " but sigma has size " + std::to_string(sigma.size()));
  }
  for (int i = 0; i + 1 < lambda.length(); ++i) {
    if (lambda.parts()[i] == lambda.parts()[i + 1] && sigma.images()[i] > sigma.images()[i + 1]) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

// Rows filled in order; each row is a composition of its sum bounded cell by
// cell by the remaining column sums. Memoized on (row, remaining columns).
class MatrixCounter {
 public:
  MatrixCounter(const std::vector<int>& rows, int columns) : rows_(rows), columns_(columns) {}

  BigInt count(std::size_t row, std::vector<int>& remaining) {
    if (row == rows_.size()) {
      return std::all_of(remaining.begin(), remaining.end(), [](int c) { return c == 0; }) ? 1 : 0;
    }
    auto key = std::make_pair(row, remaining);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    BigInt total = 0;
    fill_row(row, 0, rows_[row], remaining, total);
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  void fill_row(std::size_t row, int col, int left, std::vector<int>& remaining, BigInt& total) {
    if (col == columns_ - 1) {
      if (left > remaining[col]) return;
      remaining[col] -= left;
      total += count(row + 1, remaining);
      remaining[col] += left;
      return;
    }
    int room_after = 0;
    for (int c = col + 1; c < columns_; ++c) room_after += remaining[c];
    const int lo = std::max(0, left - room_after);
    const int hi = std::min(left, remaining[col]);
    for (int v = hi; v >= lo; --v) {
      remaining[col] -= v;
      fill_row(row, col + 1, left - v, remaining, total);
      remaining[col] += v;
    }
  }

  std::vector<int> rows_;
  int columns_;
  std::map<std::pair<std::size_t, std::vector<int>>, BigInt> memo_;
};

}  // namespace

BigInt count_matrices(const Partition& alpha, const Partition& beta) {
  if (alpha.order() != beta.order()) {
    throw std::invalid_argument("count_matrices: |alpha| = " + std::to_string(alpha.order()) +
                                " differs from |beta| = " + std::to_string(beta.order()));
  }
  if (alpha.empty()) return 1;  // the empty 0x0 matrix
  MatrixCounter counter(alpha.parts(), beta.length());
  std::vector<int> remaining = beta.parts();
  return counter.count(0, remaining);
}

}  // namespace sphpart
