#pragma once

// Integer partitions, compositions and permutations together with the
// tableau counts built on them (Kostka numbers, standard tableaux) and the
// statistics b, b-bar and the multiplicity maps Phi and Psi.

#include "sphpart/numeric.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sphpart {

/// Weakly decreasing sequence of positive integers. The empty sequence is the
/// unique partition of 0; no trailing zeros are stored.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// ord(): sorts arbitrary parts into a partition, dropping zeros.
  static Partition from_unsorted(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int order() const noexcept { return order_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  /// Zero-based row access; rows past the end have length 0.
  int row(int i) const noexcept { return i < length() ? parts_[i] : 0; }

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int order_ = 0;
};

/// Sequence of positive integers in a fixed order.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}
  Composition(const Partition& p) : parts_(p.parts()), order_(p.order()) {}  // NOLINT

  const std::vector<int>& parts() const noexcept { return parts_; }
  int order() const noexcept { return order_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }

  /// Concatenation mu . nu.
  Composition concat(const Composition& other) const;
  Partition ord() const { return Partition::from_unsorted(parts_); }

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int order_ = 0;
};

/// One-line notation (sigma_1, ..., sigma_l), 1-indexed: i maps to sigma_i.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);
  Permutation(std::initializer_list<int> images) : Permutation(std::vector<int>(images)) {}
  static Permutation identity(int size);

  const std::vector<int>& images() const noexcept { return images_; }
  int size() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_.at(i - 1); }

  Permutation inverse() const;
  /// (this * other)(i) = this(other(i)).
  Permutation operator*(const Permutation& other) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<int> images_;
};

/// All partitions of k (with at most max_parts parts when given), in
/// decreasing lexicographic order: (3), (2,1), (1,1,1).
std::vector<Partition> enumerate_partitions(int k, std::optional<int> max_parts = std::nullopt);

/// Classical partition function p_k.
BigInt partition_count(int k);

/// Dominance order on partitions of the same order.
bool dominance_leq(const Partition& lambda, const Partition& mu);

/// Number of semistandard lambda-tableaux of type mu. Throws on |lambda| != |mu|.
BigInt kostka(const Partition& lambda, const Composition& mu);

struct PartitionStats {
  std::vector<int> hooks;  // multiset of hook lengths, row-major order
  long b = 0;              // sum (i-1) lambda_i
  long bbar = 0;           // sum i lambda_i
};
PartitionStats partition_stats(const Partition& lambda);

/// Phi(nu) = ord(a_1, ..., a_p, n - sum a_i), a_i the multiplicities of the
/// distinct parts of nu; a zero last entry is dropped.
Partition phi(const Partition& nu, int n);

/// Psi(nu) = ord(a_1, ..., a_p).
Partition psi(const Partition& nu);

/// Number of standard tableaux of shape lambda (hook length formula).
BigInt std_count(const Partition& lambda);

/// lambda-bar = (lambda_2, ..., lambda_l). Throws on the empty partition.
Partition restrict_first_row(const Partition& lambda);

/// n! / prod parts_i!; zero parts allowed. Throws unless sum(parts) == n.
BigInt multinomial(int n, std::span<const int> parts);

}  // namespace sphpart
