#pragma once

// Set partitions of the 2k points of a partition-algebra diagram. Points
// 1..k form the top row, k+1..2k the bottom row (the primed points).

#include "sphpart/bipartite.hpp"
#include "sphpart/partition.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace sphpart {

class SetPartition2k {
 public:
  SetPartition2k() = default;
  /// Blocks of 1-indexed points. Throws std::invalid_argument unless they
  /// partition {1..2k} exactly.
  SetPartition2k(int k, const std::vector<std::vector<int>>& blocks);

  /// From an arbitrary block label per point (index 0 is point 1).
  static SetPartition2k from_labels(int k, const std::vector<int>& labels);
  static SetPartition2k identity(int k);

  int k() const noexcept { return k_; }
  /// Canonical blocks: each ascending, blocks ordered by minimum.
  std::vector<std::vector<int>> blocks() const;
  int block_count() const noexcept { return blocks_; }
  /// Restricted-growth label of point p (1-indexed).
  int label(int p) const { return labels_.at(p - 1); }

  std::string to_string() const;

  friend bool operator==(const SetPartition2k&, const SetPartition2k&) = default;
  friend std::strong_ordering operator<=>(const SetPartition2k& a, const SetPartition2k& b) {
    if (auto c = a.k_ <=> b.k_; c != 0) return c;
    return a.labels_ <=> b.labels_;
  }

 private:
  int k_ = 0;
  int blocks_ = 0;
  std::vector<std::uint8_t> labels_;
};

struct Composite {
  SetPartition2k diagram;
  int loops = 0;
};

/// d stacked over d1 (d's bottom row glued to d1's top row). Throws on
/// mismatched k.
Composite compose_diagrams(const SetPartition2k& d, const SetPartition2k& d1);

/// Diagram of sigma in S_k such that diagram(s) * diagram(t) = diagram(s t):
/// top point sigma(j) is joined to bottom point j.
SetPartition2k permutation_diagram(const Permutation& sigma);

/// Parts laid out left to right in normal-form order, consuming consecutive
/// top and bottom points.
SetPartition2k bipartition_diagram(const BiPartition& b);

/// The bipartite partition recording (top, bottom) sizes of every block.
BiPartition bipartition_of(const SetPartition2k& d);

int propagating_number(const SetPartition2k& d);

}  // namespace sphpart
