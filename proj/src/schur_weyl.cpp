#include "sphpart/schur_weyl.hpp"

#include <map>
#include <stdexcept>

namespace sphpart {

std::vector<int> MonomialKey::sequence() const {
  std::vector<int> out;
  for (const auto& [index, mult] : factors) out.insert(out.end(), mult, index);
  return out;
}

namespace {

void monomials_rec(int next_index, int n, int left, MonomialKey& current, std::vector<MonomialKey>& out) {
  if (left == 0) {
    out.push_back(current);
    return;
  }
  for (int i = next_index; i <= n; ++i) {
    // Lexicographic on sequences: a larger first multiplicity of a smaller
    // index comes first.
    for (int m = left; m >= 1; --m) {
      current.factors.emplace_back(i, m);
      monomials_rec(i + 1, n, left - m, current, out);
      current.factors.pop_back();
    }
  }
}

}  // namespace

std::vector<MonomialKey> monomial_basis(int k, int n) {
  if (n < 1) throw std::invalid_argument("monomial_basis: n must be positive");
  if (k < 0) throw std::invalid_argument("monomial_basis: k must be nonnegative");
  std::vector<MonomialKey> out;
  MonomialKey current;
  monomials_rec(1, n, k, current, out);
  return out;
}

std::vector<PermSummand> perm_decomposition(int k, int n) {
  if (n < 1) throw std::invalid_argument("perm_decomposition: n must be positive");
  std::vector<PermSummand> out;
  for (const auto& nu : enumerate_partitions(k, n)) {
    Partition shape = phi(nu, n);
    BigInt dim = multinomial(n, shape.parts());
    out.push_back({std::move(shape), std::move(dim)});
  }
  return out;
}

BigInt centralizer_dim(int k, int n) {
  if (n < 1) throw std::invalid_argument("centralizer_dim: n must be positive");
  BigInt count = 0;
  for (const auto& b : enumerate_bipartitions(k)) {
    if (b.length() <= n) ++count;
  }
  return count;
}

OrbitKey orbit_key(const std::vector<int>& top, const std::vector<int>& bottom) {
  if (top.size() != bottom.size()) {
    throw std::invalid_argument("orbit_key: sequences of lengths " + std::to_string(top.size()) + " and " +
                                std::to_string(bottom.size()));
  }
  std::map<int, BiPart> counts;
  for (int s : top) ++counts[s].top;
  for (int s : bottom) ++counts[s].bottom;
  std::vector<BiPart> parts;
  for (const auto& [symbol, part] : counts) parts.push_back(part);
  return BiPartition::normalize(std::move(parts));
}

}  // namespace sphpart
