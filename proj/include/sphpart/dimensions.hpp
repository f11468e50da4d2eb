#pragma once

// Index posets and dimension formulas for the cell modules of P_k and e_k P_k e_k,
// and for the Schur-Weyl multiplicity spaces G_k(lambda).

#include "sphpart/numeric.hpp"
#include "sphpart/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace sphpart {

enum class PosetKind { Full, Spherical };

std::string to_string(PosetKind kind);
/// "full" or "spherical"; throws std::invalid_argument otherwise.
PosetKind parse_poset_kind(const std::string& text);

/// Partitions of size at most k (all of them, or those with bbar <= k), ordered
/// by size and then decreasing lexicographically. lambda < mu when |lambda| > |mu|,
/// or the sizes agree and lambda is strictly dominated by mu.
class LabeledPoset {
 public:
  LabeledPoset(int k, PosetKind kind);

  int k() const noexcept { return k_; }
  PosetKind kind() const noexcept { return kind_; }
  const std::vector<Partition>& elements() const& noexcept { return elements_; }
  /// By value on temporaries, so `for (auto& x : build_poset(...).elements())` is safe.
  std::vector<Partition> elements() && { return std::move(elements_); }
  int size() const noexcept { return static_cast<int>(elements_.size()); }

  bool contains(const Partition& lambda) const;
  std::optional<int> index_of(const Partition& lambda) const;

  bool less(const Partition& lambda, const Partition& mu) const;
  bool leq(const Partition& lambda, const Partition& mu) const { return lambda == mu || less(lambda, mu); }

 private:
  int k_;
  PosetKind kind_;
  std::vector<Partition> elements_;
};

LabeledPoset build_poset(int k, PosetKind kind);

/// Membership in Lambda^k and in its spherical part.
bool in_full_poset(int k, const Partition& lambda);
bool in_spherical_poset(int k, const Partition& lambda);

/// {lambda |- n : b(lambda) <= k}, decreasing lexicographic order.
std::vector<Partition> par_sph(int k, int n);

BigInt stirling2(int n, int p);
BigInt bell(int n);

/// Throws std::invalid_argument when |lambda| > k.
BigInt cell_dim(int k, const Partition& lambda);
BigInt sph_cell_dim(int k, const Partition& lambda);

/// Coefficient of t^k in t^{b(lambda)} prod_u (1 - t^{h(u)})^{-1}.
BigInt aitken_coefficient(const Partition& lambda, int k);

/// sum over nu in Par_k with at most n parts of K_{lambda, Phi(nu, n)}.
/// Throws std::invalid_argument when b(lambda) > k.
BigInt g_dim(int k, int n, const Partition& lambda);

enum class Semisimplicity { Semisimple, NotSemisimple, Unknown };
std::string to_string(Semisimplicity s);

/// For the spherical algebra t = 0 is outside what is known and reports Unknown.
Semisimplicity is_semisimple(int k, const Rational& t, bool spherical);

}  // namespace sphpart
