#include "sphpart/decomposition.hpp"

#include <stdexcept>

namespace sphpart {

std::optional<Partition> n_pair_successor(const Partition& lambda, int n) {
  const int l = lambda.length();
  const int size = lambda.order();
  std::optional<Partition> found;
  // Addable rows (1-based): the first, each row shorter than the one above,
  // and a new row at the bottom.
  for (int i = 1; i <= l + 1; ++i) {
    const bool first = i == 1;
    if (!first && lambda.row(i - 2) == lambda.row(i - 1)) continue;
    const int extended = n - size + i;  // content of node (i, extended) is extended - i
    if (extended <= lambda.row(i - 1)) continue;
    if (!first && extended > lambda.row(i - 2)) continue;
    std::vector<int> parts = lambda.parts();
    if (i == l + 1) {
      parts.push_back(extended);
    } else {
      parts[i - 1] = extended;
    }
    if (found) {
      throw std::logic_error("n_pair_successor: two successors of " + lambda.to_string() + " for n = " +
                             std::to_string(n));
    }
    found = Partition(std::move(parts));
  }
  return found;
}

namespace {

std::optional<Partition> predecessor_in(const Partition& mu, int n, const LabeledPoset& poset) {
  std::optional<Partition> found;
  for (const auto& lambda : poset.elements()) {
    if (lambda.order() >= mu.order()) break;  // elements are sorted by size
    if (n_pair_successor(lambda, n) == mu) {
      if (found) {
        throw std::logic_error("two n-pair predecessors of " + mu.to_string() + " for n = " + std::to_string(n));
      }
      found = lambda;
    }
  }
  return found;
}

void require_member(const Partition& lambda, const LabeledPoset& poset) {
  if (!poset.contains(lambda)) {
    throw std::invalid_argument(lambda.to_string() + " is not in the " + to_string(poset.kind()) + " poset for k = " +
                                std::to_string(poset.k()));
  }
}

}  // namespace

NPairChain maximal_chain(const Partition& lambda, int n, const LabeledPoset& poset) {
  require_member(lambda, poset);
  NPairChain chain;
  chain.n = n;
  chain.partitions.push_back(lambda);
  while (true) {
    auto next = n_pair_successor(chain.partitions.back(), n);
    if (!next) break;
    if (!poset.contains(*next)) {
      // Still a partition of size <= k but outside a spherical poset.
      if (next->order() <= poset.k()) chain.truncated_by = next;
      break;
    }
    chain.partitions.push_back(std::move(*next));
  }
  return chain;
}

NPairChain block_chain(const Partition& lambda, int n, const LabeledPoset& poset) {
  require_member(lambda, poset);
  Partition start = lambda;
  while (auto prev = predecessor_in(start, n, poset)) start = std::move(*prev);
  return maximal_chain(start, n, poset);
}

LoewyLayers projective_descriptor(const NPairChain& chain, int j) {
  const int p = static_cast<int>(chain.partitions.size());
  if (j < 0 || j >= p) {
    throw std::invalid_argument("projective_descriptor: index " + std::to_string(j) + " outside a chain of length " +
                                std::to_string(p));
  }
  const auto& c = chain.partitions;
  if (p == 1) return {{c[0]}};
  if (j == 0) return {{c[0]}, {c[1]}};
  if (j == p - 1) return {{c[j]}, {c[j - 1]}, {c[j]}};
  return {{c[j]}, {c[j - 1], c[j + 1]}, {c[j]}};
}

TiltingDescriptor tilting_descriptor(const NPairChain& chain, int j) {
  const int p = static_cast<int>(chain.partitions.size());
  if (j < 0 || j >= p) {
    throw std::invalid_argument("tilting_descriptor: index " + std::to_string(j) + " outside a chain of length " +
                                std::to_string(p));
  }
  if (j + 1 < p) {
    return {TiltingDescriptor::Kind::Projective, chain.partitions[j + 1], projective_descriptor(chain, j + 1)};
  }
  return {TiltingDescriptor::Kind::Standard, chain.partitions[j], {{chain.partitions[j]}}};
}

DecompositionReport decomposition_report(int k, int n, PosetKind kind) {
  if (n == 0) throw std::invalid_argument("t = 0 is excluded: quasi-heredity at t = 0 is not covered");
  const LabeledPoset poset(k, kind);
  DecompositionReport report;
  report.k = k;
  report.n = n;
  report.kind = kind;
  report.labels = poset.elements();
  const int size = poset.size();
  report.matrix.assign(size, std::vector<int>(size, 0));
  report.cell_dims.resize(size);
  report.simple_dims.resize(size);
  report.projectives.resize(size);
  report.tiltings.resize(size);

  for (int r = 0; r < size; ++r) {
    report.cell_dims[r] = kind == PosetKind::Full ? cell_dim(k, report.labels[r]) : sph_cell_dim(k, report.labels[r]);
  }

  std::vector<bool> placed(size, false);
  for (int r = 0; r < size; ++r) {
    if (placed[r]) continue;
    const NPairChain chain = block_chain(report.labels[r], n, poset);
    if (chain.truncated_by) report.truncations.emplace_back(chain.partitions.back(), *chain.truncated_by);
    std::vector<int> indices;
    for (const auto& lambda : chain.partitions) indices.push_back(*poset.index_of(lambda));
    const int p = static_cast<int>(indices.size());
    for (int j = 0; j < p; ++j) {
      if (placed[indices[j]]) throw std::logic_error("n-pair chains overlap at " + chain.partitions[j].to_string());
      placed[indices[j]] = true;
      report.matrix[indices[j]][indices[j]] = 1;
      if (j + 1 < p) report.matrix[indices[j]][indices[j + 1]] = 1;
      report.projectives[indices[j]] = projective_descriptor(chain, j);
      report.tiltings[indices[j]] = tilting_descriptor(chain, j);
    }
    // dim L(lambda^j) = dim Delta(lambda^j) - dim L(lambda^{j+1}).
    BigInt below = 0;
    for (int j = p - 1; j >= 0; --j) {
      report.simple_dims[indices[j]] = report.cell_dims[indices[j]] - below;
      below = report.simple_dims[indices[j]];
    }
    report.chains.push_back(std::move(indices));
  }
  return report;
}

std::vector<ConjectureRow> conjecture_check(int k, int n) {
  if (n < 1) throw std::invalid_argument("conjecture_check: n must be at least 1");
  const DecompositionReport report = decomposition_report(k, n, PosetKind::Spherical);
  std::vector<ConjectureRow> rows;
  for (const auto& lambda : par_sph(k, n)) {
    ConjectureRow row;
    row.lambda = lambda;
    row.lambda_bar = restrict_first_row(lambda);
    row.g_dim = g_dim(k, n, lambda);
    bool found = false;
    for (std::size_t i = 0; i < report.labels.size(); ++i) {
      if (report.labels[i] == row.lambda_bar) {
        row.simple_dim = report.simple_dims[i];
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::logic_error("conjecture_check: " + row.lambda_bar.to_string() + " missing from the spherical poset");
    }
    row.equal = row.g_dim == row.simple_dim;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace sphpart
