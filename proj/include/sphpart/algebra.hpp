#pragma once

// Elements of the partition algebra over Q[x] and the spherical subalgebra
// e_k P_k e_k.

#include "sphpart/diagram.hpp"
#include "sphpart/polynomial.hpp"

#include <map>
#include <vector>

namespace sphpart {

/// Largest k for which e_k (k! terms) is materialized unless a caller asks
/// for more.
inline constexpr int kDefaultSymmetrizerBound = 8;

class AlgebraElement {
 public:
  using Terms = std::map<SetPartition2k, RationalPolynomial>;

  explicit AlgebraElement(int k) : k_(k) {}
  AlgebraElement(const SetPartition2k& d, RationalPolynomial coefficient = 1);

  int k() const noexcept { return k_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Coefficient of d; zero when d is not in the support.
  RationalPolynomial coefficient(const SetPartition2k& d) const;

  void add_term(const SetPartition2k& d, const RationalPolynomial& coefficient);

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  AlgebraElement& operator*=(const RationalPolynomial& scalar);

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(AlgebraElement a, const RationalPolynomial& s) { return a *= s; }
  friend AlgebraElement operator*(const RationalPolynomial& s, AlgebraElement a) { return a *= s; }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

 private:
  void require_same_k(const AlgebraElement& other) const;

  int k_;
  Terms terms_;
};

/// Element evaluated at x = t: diagram -> rational.
using SpecializedElement = std::map<SetPartition2k, Rational>;

/// e_k = (1/k!) sum of all permutation diagrams. Throws std::invalid_argument
/// when k exceeds max_k.
AlgebraElement symmetrizer(int k, int max_k = kDefaultSymmetrizerBound);

/// e_k N(b) e_k for every b in enumerate_bipartitions(k), in that order.
std::vector<AlgebraElement> spherical_basis(int k, int max_k = kDefaultSymmetrizerBound);

/// Terms whose coefficient vanishes at t are dropped.
SpecializedElement specialize(const AlgebraElement& a, const Rational& t);

/// Rank over Q of the elements specialized at t (exact elimination).
int rank_at(const std::vector<AlgebraElement>& elements, const Rational& t);

/// Rank of already specialized rows.
int rank_of(const std::vector<SpecializedElement>& rows);

}  // namespace sphpart
