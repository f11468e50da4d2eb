#include "sphpart/pairing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace sphpart {

namespace {

// Top row: blocks of nu left to right, then the mu block; bottom row the
// same. The j-th nu block on top is joined to the j-th nu block on the
// bottom; the two mu blocks stay separate.
SetPartition2k layout(int k, const Partition& nu, int mu_size) {
  std::vector<int> labels(2 * k);
  int pos = 0;
  for (int j = 0; j < nu.length(); ++j) {
    for (int r = 0; r < nu.parts()[j]; ++r, ++pos) labels[pos] = labels[k + pos] = j;
  }
  for (int r = 0; r < mu_size; ++r, ++pos) {
    labels[pos] = nu.length();
    labels[k + pos] = nu.length() + 1;
  }
  return SetPartition2k::from_labels(k, labels);
}

// Permutations of S_k that move whole nu blocks of equal size onto each other
// (order preserving inside blocks); the row symmetrizer of the row reading
// tableau acts through them.
std::vector<Permutation> block_permutations(int k, const Partition& nu) {
  std::vector<int> start(nu.length());
  for (int j = 1; j < nu.length(); ++j) start[j] = start[j - 1] + nu.parts()[j - 1];

  std::vector<Permutation> out{Permutation::identity(k)};
  int j = 0;
  while (j < nu.length()) {
    int end = j;
    while (end < nu.length() && nu.parts()[end] == nu.parts()[j]) ++end;
    std::vector<int> group(end - j);
    std::iota(group.begin(), group.end(), j);
    std::vector<Permutation> extended;
    do {
      std::vector<int> images(k);
      std::iota(images.begin(), images.end(), 1);
      for (int g = 0; g < static_cast<int>(group.size()); ++g) {
        for (int r = 0; r < nu.parts()[j]; ++r) images[start[j + g] + r] = start[group[g]] + r + 1;
      }
      const Permutation w(std::move(images));
      for (const auto& p : out) extended.push_back(w * p);
    } while (std::next_permutation(group.begin(), group.end()));
    out = std::move(extended);
    j = end;
  }
  return out;
}

}  // namespace

PairingElement pairing_element(int k, const Partition& lambda, int max_k) {
  const long bbar = partition_stats(lambda).bbar;
  if (bbar > k) {
    throw std::invalid_argument("pairing_coefficient: " + lambda.to_string() + " has bbar = " + std::to_string(bbar) +
                                " > k = " + std::to_string(k));
  }
  std::vector<int> nu_parts;
  for (int r = lambda.length(); r >= 1; --r) nu_parts.insert(nu_parts.end(), lambda.parts()[r - 1], r);

  PairingElement out;
  out.nu = Partition(std::move(nu_parts));
  out.mu_size = k - out.nu.order();
  out.diagram = layout(k, out.nu, out.mu_size);

  const AlgebraElement e = symmetrizer(k, max_k);
  AlgebraElement sum(k);
  for (const auto& w : block_permutations(k, out.nu)) {
    sum += AlgebraElement(permutation_diagram(w)) * AlgebraElement(out.diagram);
  }
  out.element = e * sum * e;
  return out;
}

RationalPolynomial pairing_coefficient(int k, const Partition& lambda, int max_k) {
  const PairingElement c = pairing_element(k, lambda, max_k);
  const RationalPolynomial base = c.element.coefficient(c.diagram);
  if (base.degree() != 0) throw std::logic_error("pairing_coefficient: C has no constant coefficient at D");
  const AlgebraElement square = c.element * c.element;
  return square.coefficient(c.diagram) * RationalPolynomial(Rational(1) / base.coefficient(0));
}

}  // namespace sphpart
