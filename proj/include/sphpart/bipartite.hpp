#pragma once

#include "sphpart/numeric.hpp"
#include "sphpart/partition.hpp"

#include <utility>
#include <vector>

namespace sphpart {

/// A part [x, y]: x top points, y bottom points.
struct BiPart {
  int top = 0;
  int bottom = 0;

  friend bool operator==(const BiPart&, const BiPart&) = default;
  friend auto operator<=>(const BiPart&, const BiPart&) = default;
};

/// Bipartite partition of k stored in normal form: parts sorted by top size
/// descending, ties broken by bottom size descending.
class BiPartition {
 public:
  BiPartition() = default;

  /// Normalizes an arbitrary multiset of parts. Throws std::invalid_argument
  /// on a [0,0] part, a negative entry or unequal top/bottom sums.
  static BiPartition normalize(std::vector<BiPart> parts);

  const std::vector<BiPart>& parts() const noexcept { return parts_; }
  int order() const noexcept { return order_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  /// Number of parts with both coordinates nonzero.
  int propagating_parts() const noexcept;

  std::string to_string() const;

  friend bool operator==(const BiPartition&, const BiPartition&) = default;
  friend auto operator<=>(const BiPartition& a, const BiPartition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<BiPart> parts_;
  int order_ = 0;
};

BiPartition normalize(std::vector<BiPart> parts);

/// All of BiPar_k, each in normal form, ordered by decreasing lexicographic
/// comparison of the normal-form sequences. Size is bp_k.
std::vector<BiPartition> enumerate_bipartitions(int k);

/// bp_k without enumeration: the x^k y^k coefficient of prod 1/(1 - x^a y^b)
/// over (a, b) != (0, 0).
BigInt bipartition_count(int k);

/// Garsia-Gessel view of a bipartite partition. The propagating part is
/// (lambda_top_pro, lambda_bot_pro, sigma): bottom part i is joined to top
/// part sigma_i, with no crossings among lines leaving parts of equal size.
struct GGForm {
  Partition lambda_top;
  Partition lambda_bot;
  Partition lambda_top_pro;
  Partition lambda_bot_pro;
  Permutation sigma;
  Partition nonprop_top;
  Partition nonprop_bot;
};

GGForm gg_form(const BiPartition& b);

/// Rebuilds the multiset of parts encoded by a GG form.
BiPartition from_gg_form(const GGForm& gg);

/// lambda_i == lambda_{i+1} implies sigma_i < sigma_{i+1}.
bool is_sigma_compatible(const Partition& lambda, const Permutation& sigma);

/// Number of nonnegative integer matrices with row sums alpha and column sums beta.
BigInt count_matrices(const Partition& alpha, const Partition& beta);

}  // namespace sphpart
