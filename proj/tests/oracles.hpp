#pragma once

// Slow, independent reference computations. None of these share code paths
// with the library routines they are compared against.

#include "sphpart/diagram.hpp"
#include "sphpart/numeric.hpp"
#include "sphpart/partition.hpp"
#include "sphpart/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using sphpart::BigInt;
using sphpart::Partition;

/// Every weakly decreasing positive sequence summing to k, from all
/// compositions (2^{k-1} of them) sorted and deduplicated.
inline std::set<std::vector<int>> partitions(int k) {
  std::set<std::vector<int>> out;
  if (k == 0) {
    out.insert(std::vector<int>{});
    return out;
  }
  for (unsigned mask = 0; mask < (1u << (k - 1)); ++mask) {
    std::vector<int> parts{1};
    for (int i = 0; i < k - 1; ++i) {
      if (mask & (1u << i)) {
        parts.push_back(1);
      } else {
        ++parts.back();
      }
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    out.insert(parts);
  }
  return out;
}

/// Fillings of lambda with entries 1..m tried exhaustively, rows weakly
/// increasing and columns strictly increasing.
inline long kostka(const std::vector<int>& lambda, const std::vector<int>& content) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < static_cast<int>(lambda.size()); ++r) {
    for (int c = 0; c < lambda[r]; ++c) cells.emplace_back(r, c);
  }
  const int m = static_cast<int>(content.size());
  std::vector<std::vector<int>> grid(lambda.size());
  for (std::size_t r = 0; r < lambda.size(); ++r) grid[r].assign(lambda[r], 0);
  long count = 0;
  std::vector<int> used(m + 1, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      for (int v = 1; v <= m; ++v) {
        if (used[v] != content[v - 1]) return;
      }
      ++count;
      return;
    }
    auto [r, c] = cells[idx];
    for (int v = 1; v <= m; ++v) {
      if (c > 0 && grid[r][c - 1] > v) continue;
      if (r > 0 && grid[r - 1][c] >= v) continue;
      if (used[v] == content[v - 1]) continue;
      grid[r][c] = v;
      ++used[v];
      rec(idx + 1);
      --used[v];
    }
    grid[r][c] = 0;
  };
  rec(0);
  return count;
}

/// f^lambda by removing corners: f^lambda = sum over corners of f^{lambda - corner}.
inline BigInt std_count(std::vector<int> lambda) {
  while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
  if (lambda.empty()) return 1;
  BigInt total = 0;
  for (std::size_t r = 0; r < lambda.size(); ++r) {
    const bool corner = r + 1 == lambda.size() || lambda[r + 1] < lambda[r];
    if (!corner) continue;
    auto smaller = lambda;
    --smaller[r];
    total += std_count(smaller);
  }
  return total;
}

/// bp_k as the coefficient of x^k y^k in prod over (a,b) != (0,0) of 1/(1 - x^a y^b).
inline std::vector<BigInt> bp_series(int max_k) {
  const int s = max_k + 1;
  std::vector<BigInt> poly(s * s, BigInt(0));
  poly[0] = 1;
  for (int a = 0; a <= max_k; ++a) {
    for (int b = 0; b <= max_k; ++b) {
      if (a == 0 && b == 0) continue;
      for (int x = a; x <= max_k; ++x) {
        for (int y = b; y <= max_k; ++y) poly[x * s + y] += poly[(x - a) * s + (y - b)];
      }
    }
  }
  std::vector<BigInt> out;
  for (int k = 0; k <= max_k; ++k) out.push_back(poly[k * s + k]);
  return out;
}

/// Bell numbers from the Bell triangle.
inline std::vector<BigInt> bell_triangle(int max_n) {
  std::vector<BigInt> bells{1};
  std::vector<BigInt> row{1};
  for (int n = 1; n <= max_n; ++n) {
    std::vector<BigInt> next{row.back()};
    for (const auto& v : row) next.push_back(next.back() + v);
    bells.push_back(next.front());
    row = std::move(next);
  }
  return bells;
}

/// All restricted growth strings of length n (set partitions of n points).
inline std::vector<std::vector<int>> set_partitions(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::function<void(int)> rec = [&](int max_label) {
    if (static_cast<int>(current.size()) == n) {
      out.push_back(current);
      return;
    }
    for (int v = 0; v <= max_label + 1; ++v) {
      current.push_back(v);
      rec(std::max(max_label, v));
      current.pop_back();
    }
  };
  rec(-1);
  return out;
}

/// Every nonnegative matrix with the given margins, cell by cell.
inline long count_matrices(const std::vector<int>& rows, const std::vector<int>& cols) {
  const std::size_t r = rows.size(), c = cols.size();
  if (r == 0 || c == 0) return r == 0 && c == 0 ? 1 : 0;
  std::vector<int> row_left = rows, col_left = cols;
  long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t cell) {
    if (cell == r * c) {
      for (int v : row_left) {
        if (v) return;
      }
      for (int v : col_left) {
        if (v) return;
      }
      ++count;
      return;
    }
    const std::size_t i = cell / c, j = cell % c;
    for (int v = 0; v <= std::min(row_left[i], col_left[j]); ++v) {
      row_left[i] -= v;
      col_left[j] -= v;
      rec(cell + 1);
      row_left[i] += v;
      col_left[j] += v;
    }
  };
  rec(0);
  return count;
}

/// n-pair successors found by trying every extension of every row of lambda
/// (including a new bottom row) by up to max_extra boxes, keeping those that
/// are partitions and whose last added node has |lambda|-content n.
inline std::vector<std::vector<int>> n_pair_successors(const std::vector<int>& lambda, int n, int max_extra) {
  const int size = std::accumulate(lambda.begin(), lambda.end(), 0);
  std::vector<std::vector<int>> out;
  for (std::size_t row = 0; row <= lambda.size(); ++row) {
    for (int extra = 1; extra <= max_extra; ++extra) {
      std::vector<int> mu = lambda;
      if (row == lambda.size()) mu.push_back(0);
      mu[row] += extra;
      if (!std::is_sorted(mu.begin(), mu.end(), std::greater<>())) continue;
      // The rightmost node of row r (1-based) in column c has content c - r.
      if (size + mu[row] - static_cast<int>(row + 1) == n) out.push_back(mu);
    }
  }
  return out;
}

/// Pairing coefficient from a different expansion: C C = c^2 e D e D e and
/// e D' e = e D e exactly when D' lies in the S_k x S_k orbit of D, i.e. has
/// the same block-size bipartition. Summing over the middle e gives
/// (prod lambda_i!) / k! times sum of x^{loops} over sigma with DsD in that orbit.
inline sphpart::RationalPolynomial pairing(int k, const sphpart::SetPartition2k& d, const Partition& lambda) {
  using sphpart::Rational;
  using sphpart::RationalPolynomial;
  const auto target = sphpart::bipartition_of(d);
  std::vector<int> images(k);
  std::iota(images.begin(), images.end(), 1);
  RationalPolynomial sum;
  do {
    const auto sigma = sphpart::permutation_diagram(sphpart::Permutation(images));
    const auto left = sphpart::compose_diagrams(d, sigma);
    const auto full = sphpart::compose_diagrams(left.diagram, d);
    if (sphpart::bipartition_of(full.diagram) == target) {
      sum += RationalPolynomial::monomial(left.loops + full.loops);
    }
  } while (std::next_permutation(images.begin(), images.end()));
  BigInt c = 1;
  for (int p : lambda.parts()) c *= sphpart::factorial(p);
  return sum * RationalPolynomial(Rational(c) / Rational(sphpart::factorial(k)));
}

}  // namespace oracle
