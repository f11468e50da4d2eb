#include "sphpart/diagram.hpp"

#include <numeric>
#include <stdexcept>

namespace sphpart {

namespace {

constexpr int kMaxPoints = 255;

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

SetPartition2k SetPartition2k::from_labels(int k, const std::vector<int>& labels) {
  if (k < 0 || 2 * k > kMaxPoints) throw std::invalid_argument("diagram size out of range: k = " + std::to_string(k));
  if (static_cast<int>(labels.size()) != 2 * k) {
    throw std::invalid_argument("expected " + std::to_string(2 * k) + " point labels");
  }
  SetPartition2k d;
  d.k_ = k;
  d.labels_.resize(labels.size());
  std::vector<std::pair<int, int>> seen;  // (raw label, canonical label), small
  for (std::size_t p = 0; p < labels.size(); ++p) {
    int canon = -1;
    for (const auto& [raw, c] : seen) {
      if (raw == labels[p]) {
        canon = c;
        break;
      }
    }
    if (canon < 0) {
      canon = d.blocks_++;
      seen.emplace_back(labels[p], canon);
    }
    d.labels_[p] = static_cast<std::uint8_t>(canon);
  }
  return d;
}

SetPartition2k::SetPartition2k(int k, const std::vector<std::vector<int>>& blocks) {
  if (k < 0 || 2 * k > kMaxPoints) throw std::invalid_argument("diagram size out of range: k = " + std::to_string(k));
  std::vector<int> labels(2 * k, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("empty block in diagram");
    for (int p : blocks[b]) {
      if (p < 1 || p > 2 * k) throw std::invalid_argument("point " + std::to_string(p) + " outside 1.." + std::to_string(2 * k));
      if (labels[p - 1] >= 0) throw std::invalid_argument("point " + std::to_string(p) + " appears twice");
      labels[p - 1] = static_cast<int>(b);
    }
  }
  for (int p = 0; p < 2 * k; ++p) {
    if (labels[p] < 0) throw std::invalid_argument("point " + std::to_string(p + 1) + " not covered");
  }
  *this = from_labels(k, labels);
}

SetPartition2k SetPartition2k::identity(int k) {
  std::vector<int> labels(2 * k);
  for (int i = 0; i < k; ++i) labels[i] = labels[k + i] = i;
  return from_labels(k, labels);
}

std::vector<std::vector<int>> SetPartition2k::blocks() const {
  std::vector<std::vector<int>> out(blocks_);
  for (std::size_t p = 0; p < labels_.size(); ++p) out[labels_[p]].push_back(static_cast<int>(p) + 1);
  return out;
}

std::string SetPartition2k::to_string() const {
  std::string out = "{";
  bool first_block = true;
  for (const auto& block : blocks()) {
    if (!first_block) out += ",";
    first_block = false;
    out += "{";
    for (std::size_t i = 0; i < block.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(block[i]);
    }
    out += "}";
  }
  return out + "}";
}

Composite compose_diagrams(const SetPartition2k& d, const SetPartition2k& d1) {
  if (d.k() != d1.k()) {
    throw std::invalid_argument("compose_diagrams: k = " + std::to_string(d.k()) + " vs " + std::to_string(d1.k()));
  }
  const int k = d.k();
  // Points: [0,k) top of d, [k,2k) middle, [2k,3k) bottom of d1. Block
  // representatives sit after the points so labels can be united directly.
  const int points = 3 * k;
  UnionFind uf(points + d.block_count() + d1.block_count());
  const int d_base = points;
  const int d1_base = points + d.block_count();
  for (int p = 0; p < 2 * k; ++p) uf.unite(p, d_base + d.label(p + 1));
  for (int p = 0; p < 2 * k; ++p) uf.unite(k + p, d1_base + d1.label(p + 1));

  std::vector<int> labels(2 * k);
  std::vector<bool> touches_outer(points + d.block_count() + d1.block_count(), false);
  for (int p = 0; p < k; ++p) {
    labels[p] = uf.find(p);
    labels[k + p] = uf.find(2 * k + p);
    touches_outer[labels[p]] = touches_outer[labels[k + p]] = true;
  }
  Composite out;
  std::vector<bool> counted(touches_outer.size(), false);
  for (int p = k; p < 2 * k; ++p) {
    const int root = uf.find(p);
    if (!touches_outer[root] && !counted[root]) {
      counted[root] = true;
      ++out.loops;
    }
  }
  out.diagram = SetPartition2k::from_labels(k, labels);
  return out;
}

SetPartition2k permutation_diagram(const Permutation& sigma) {
  const int k = sigma.size();
  std::vector<int> labels(2 * k);
  for (int j = 1; j <= k; ++j) {
    labels[sigma(j) - 1] = j;
    labels[k + j - 1] = j;
  }
  return SetPartition2k::from_labels(k, labels);
}

SetPartition2k bipartition_diagram(const BiPartition& b) {
  const int k = b.order();
  std::vector<int> labels(2 * k);
  int top = 0, bottom = k;
  for (int i = 0; i < b.length(); ++i) {
    for (int j = 0; j < b.parts()[i].top; ++j) labels[top++] = i;
    for (int j = 0; j < b.parts()[i].bottom; ++j) labels[bottom++] = i;
  }
  return SetPartition2k::from_labels(k, labels);
}

BiPartition bipartition_of(const SetPartition2k& d) {
  std::vector<BiPart> parts(d.block_count());
  for (int p = 1; p <= 2 * d.k(); ++p) {
    if (p <= d.k()) {
      ++parts[d.label(p)].top;
    } else {
      ++parts[d.label(p)].bottom;
    }
  }
  return BiPartition::normalize(std::move(parts));
}

int propagating_number(const SetPartition2k& d) {
  std::vector<int> seen(d.block_count(), 0);  // bit 1 top, bit 2 bottom
  for (int p = 1; p <= 2 * d.k(); ++p) seen[d.label(p)] |= p <= d.k() ? 1 : 2;
  int count = 0;
  for (int s : seen) count += s == 3;
  return count;
}

}  // namespace sphpart
