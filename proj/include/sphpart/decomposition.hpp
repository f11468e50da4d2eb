#pragma once

// n-pairs, their chains, and everything the chains determine: decomposition
// matrices, blocks, simple dimensions, and Loewy descriptors of projective
// and tilting modules.

#include "sphpart/dimensions.hpp"

#include <optional>
#include <vector>

namespace sphpart {

/// The unique mu obtained from lambda by extending one row so that its new
/// rightmost node has |lambda|-content n, if any. Throws std::logic_error if
/// the row scan ever finds two.
std::optional<Partition> n_pair_successor(const Partition& lambda, int n);

struct NPairChain {
  int n = 0;
  std::vector<Partition> partitions;
  bool maximal = true;
  /// Successor that exists but lies outside the poset, which ended the chain.
  std::optional<Partition> truncated_by;
};

/// lambda, its successor, and so on while successors stay in the poset.
/// Throws std::invalid_argument if lambda is not in the poset.
NPairChain maximal_chain(const Partition& lambda, int n, const LabeledPoset& poset);

/// The maximal chain through lambda extended backwards to its first element:
/// the block containing lambda.
NPairChain block_chain(const Partition& lambda, int n, const LabeledPoset& poset);

/// Radical layers of an indecomposable module; each layer a multiset of labels.
using LoewyLayers = std::vector<std::vector<Partition>>;

/// Loewy layers of P(lambda^j), j zero-based along the chain.
LoewyLayers projective_descriptor(const NPairChain& chain, int j);

struct TiltingDescriptor {
  enum class Kind { Projective, Standard };
  Kind kind;
  Partition label;  // T(lambda^j) is P(label) or Delta(label)
  LoewyLayers layers;
};

TiltingDescriptor tilting_descriptor(const NPairChain& chain, int j);

struct DecompositionReport {
  int k = 0;
  int n = 0;
  PosetKind kind = PosetKind::Full;
  std::vector<Partition> labels;
  std::vector<std::vector<int>> chains;      // indices into labels, one chain per block
  std::vector<std::vector<int>> matrix;      // [Delta(labels[r]) : L(labels[c])]
  std::vector<BigInt> cell_dims;
  std::vector<BigInt> simple_dims;
  std::vector<LoewyLayers> projectives;      // per label
  std::vector<TiltingDescriptor> tiltings;   // per label
  /// (lambda, successor) pairs where a chain stopped at the poset boundary.
  std::vector<std::pair<Partition, Partition>> truncations;
};

/// Throws std::invalid_argument for n = 0.
DecompositionReport decomposition_report(int k, int n, PosetKind kind);

struct ConjectureRow {
  Partition lambda;
  Partition lambda_bar;
  BigInt g_dim;
  BigInt simple_dim;
  bool equal = false;
};

/// dim G_k(lambda) against dim e_k L_k(lambda-bar) for lambda in par_sph(k, n).
/// Throws std::invalid_argument for n < 1.
std::vector<ConjectureRow> conjecture_check(int k, int n);

}  // namespace sphpart
