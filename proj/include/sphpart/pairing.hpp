#pragma once

#include "sphpart/algebra.hpp"

namespace sphpart {

/// The distinguished element C attached to lambda in the spherical cell
/// datum, together with the diagram D it is built on.
struct PairingElement {
  Partition nu;     // (p^{lambda_p}, ..., 1^{lambda_1})
  int mu_size = 0;  // k - |nu|
  SetPartition2k diagram;
  AlgebraElement element{1};
};

/// Throws std::invalid_argument unless bbar(lambda) <= k.
PairingElement pairing_element(int k, const Partition& lambda, int max_k = kDefaultSymmetrizerBound);

/// Coefficient of C in C*C, read off at the diagram D. A polynomial of degree
/// at most one in x.
RationalPolynomial pairing_coefficient(int k, const Partition& lambda, int max_k = kDefaultSymmetrizerBound);

}  // namespace sphpart
