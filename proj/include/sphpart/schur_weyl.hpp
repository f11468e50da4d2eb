#pragma once

// The symmetric power S^k V_n as a permutation module, and the dimension of
// its centralizer counted through orbits on pairs of monomials.

#include "sphpart/bipartite.hpp"

#include <utility>
#include <vector>

namespace sphpart {

/// v_{i_1}^{m_1} ... v_{i_p}^{m_p}: (index, multiplicity) pairs with strictly
/// increasing indices in 1..n and multiplicities summing to k.
struct MonomialKey {
  std::vector<std::pair<int, int>> factors;

  /// i_1 <= ... <= i_k.
  std::vector<int> sequence() const;

  friend bool operator==(const MonomialKey&, const MonomialKey&) = default;
  friend auto operator<=>(const MonomialKey&, const MonomialKey&) = default;
};

/// The S_n-orbit of a pair of monomials: a bipartite partition of k with at
/// most n parts.
using OrbitKey = BiPartition;

/// All monomials of degree k in n variables, in lexicographic order of their
/// index sequences. Throws std::invalid_argument for n < 1 or k < 0.
std::vector<MonomialKey> monomial_basis(int k, int n);

struct PermSummand {
  Partition shape;  // Phi(nu)
  BigInt dim;       // dim M(Phi(nu)) = multinomial(n; Phi(nu))
};

/// One summand per nu in Par_k with at most n parts, in the enumeration order of nu.
std::vector<PermSummand> perm_decomposition(int k, int n);

/// Bipartite partitions of k with at most n parts.
BigInt centralizer_dim(int k, int n);

/// Occurrence counts of every symbol in (top, bottom), normalized. Both
/// sequences must have the same length.
OrbitKey orbit_key(const std::vector<int>& top, const std::vector<int>& bottom);

}  // namespace sphpart
