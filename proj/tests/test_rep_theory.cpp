#include "oracles.hpp"

#include "sphpart/bipartite.hpp"
#include "sphpart/decomposition.hpp"
#include "sphpart/dimensions.hpp"

#include <doctest.h>

using namespace sphpart;

TEST_CASE("posets") {
  CHECK(build_poset(3, PosetKind::Spherical).elements() == std::vector<Partition>{{}, {1}, {2}, {1, 1}, {3}});
  CHECK(build_poset(1, PosetKind::Spherical).elements() == std::vector<Partition>{{}, {1}});
  for (int k = 2; k <= 8; ++k) {
    const auto sph = build_poset(k, PosetKind::Spherical);
    CHECK(sph.contains(Partition{k}));
    CHECK_FALSE(sph.contains(Partition(std::vector<int>(k, 1))));
    const auto full = build_poset(k, PosetKind::Full);
    long expected = 0;
    for (int l = 0; l <= k; ++l) expected += static_cast<long>(oracle::partitions(l).size());
    CHECK(full.size() == expected);
    for (const auto& lambda : sph.elements()) CHECK(full.contains(lambda));
  }
  const auto p = build_poset(4, PosetKind::Full);
  CHECK(p.less({2}, {1}));
  CHECK(p.less({2, 1, 1}, {2, 2}));
  CHECK_FALSE(p.less({3, 1}, {2, 2}));
  CHECK_FALSE(p.less({2, 2}, {2, 2}));
  CHECK(p.leq({2, 2}, {2, 2}));
}

TEST_CASE("par_sph") {
  CHECK(par_sph(3, 6) == std::vector<Partition>{{6}, {5, 1}, {4, 2}, {4, 1, 1}, {3, 3}});
  for (int k = 0; k <= 5; ++k) CHECK(par_sph(k, 1) == std::vector<Partition>{{1}});
  for (int k = 2; k <= 6; ++k) {
    for (int n = 2 * k; n <= 2 * k + 3; ++n) {
      const auto ps = par_sph(k, n);
      std::vector<int> hook{n - k};
      hook.insert(hook.end(), k, 1);
      CHECK(std::find(ps.begin(), ps.end(), Partition{n - k, k}) != ps.end());
      CHECK(std::find(ps.begin(), ps.end(), Partition(hook)) == ps.end());
    }
  }
  for (int k = 0; k <= 10; ++k) {
    for (int n = 1; n <= 8; ++n) {
      CHECK((par_sph(k, n).size() == enumerate_partitions(n).size()) == (n * (n - 1) / 2 <= k));
    }
  }
}

TEST_CASE("stirling and bell") {
  const auto bells = oracle::bell_triangle(16);
  for (int n = 0; n <= 16; ++n) CHECK(bell(n) == bells[n]);
  for (int n = 0; n <= 8; ++n) CHECK(bell(n) == BigInt(oracle::set_partitions(n).size()));
  CHECK(stirling2(5, 2) == 15);
  CHECK(stirling2(0, 0) == 1);
  CHECK(stirling2(3, 0) == 0);
}

TEST_CASE("cell dimensions") {
  const std::vector<Partition> labels{{}, {1}, {2}, {1, 1}, {3}, {2, 1}, {1, 1, 1}};
  const std::vector<long> expected{5, 10, 6, 6, 1, 2, 1};
  BigInt squares = 0;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    CHECK(cell_dim(3, labels[i]) == expected[i]);
    squares += cell_dim(3, labels[i]) * cell_dim(3, labels[i]);
  }
  CHECK(squares == 203);
  for (int k = 1; k <= 8; ++k) {
    CHECK(cell_dim(k, Partition{k}) == 1);
    CHECK(cell_dim(k, Partition(std::vector<int>(k, 1))) == 1);
    CHECK(cell_dim(k, {}) == bell(k));
  }
  CHECK_THROWS_AS(cell_dim(2, {3}), std::invalid_argument);

  // Set partitions of 2k points with exactly l propagating blocks, brute force.
  for (int k = 1; k <= 4; ++k) {
    std::vector<BigInt> by_l(k + 1, BigInt(0));
    for (const auto& labels2k : oracle::set_partitions(2 * k)) {
      const auto d = SetPartition2k::from_labels(k, labels2k);
      ++by_l[propagating_number(d)];
    }
    for (int l = 0; l <= k; ++l) {
      BigInt sum = 0;
      for (const auto& lambda : enumerate_partitions(l)) sum += cell_dim(k, lambda) * cell_dim(k, lambda);
      CHECK(sum == by_l[l]);
    }
  }
}

TEST_CASE("spherical cell dimensions") {
  CHECK(sph_cell_dim(3, {1}) == 4);
  CHECK(sph_cell_dim(3, {3}) == 1);
  const std::vector<Partition> labels{{}, {1}, {2}, {1, 1}, {3}};
  const std::vector<long> expected{3, 4, 2, 1, 1};
  for (std::size_t i = 0; i < labels.size(); ++i) CHECK(sph_cell_dim(3, labels[i]) == expected[i]);
  for (int k = 1; k <= 12; ++k) CHECK(sph_cell_dim(k, {}) == partition_count(k));

  for (int k = 1; k <= 10; ++k) {
    for (const auto& lambda : build_poset(k, PosetKind::Full).elements()) {
      CHECK((sph_cell_dim(k, lambda) > 0) == (partition_stats(lambda).bbar <= k));
    }
  }
  const auto bp = oracle::bp_series(12);
  for (int k = 1; k <= 12; ++k) {
    BigInt squares = 0;
    for (const auto& lambda : build_poset(k, PosetKind::Full).elements()) {
      const BigInt d = sph_cell_dim(k, lambda);
      squares += d * d;
    }
    CHECK(squares == bp[k]);
    if (k <= 8) CHECK(squares == BigInt(enumerate_bipartitions(k).size()));
  }
}

TEST_CASE("aitken coefficients") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& lambda : enumerate_partitions(n)) {
      const long b = partition_stats(lambda).b;
      for (int k = 0; k <= 7; ++k) {
        BigInt kostka_sum = 0;
        for (const auto& nu : enumerate_partitions(k, n)) kostka_sum += kostka(lambda, phi(nu, n));
        CHECK(aitken_coefficient(lambda, k) == kostka_sum);
        CHECK((aitken_coefficient(lambda, k) == 0) == (k < b));
      }
    }
  }
  // A single row: partitions of k into parts of size at most n.
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k <= 10; ++k) {
      long count = 0;
      for (const auto& p : enumerate_partitions(k)) count += p.empty() || p.parts()[0] <= n;
      CHECK(aitken_coefficient(Partition{n}, k) == count);
    }
  }
}

TEST_CASE("g dimensions") {
  const std::vector<Partition> lambdas{{6}, {5, 1}, {4, 2}, {3, 3}, {4, 1, 1}};
  const std::vector<long> expected{3, 4, 2, 1, 1};
  BigInt squares = 0, weighted = 0;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const BigInt g = g_dim(3, 6, lambdas[i]);
    CHECK(g == expected[i]);
    squares += g * g;
    weighted += std_count(lambdas[i]) * g;
  }
  CHECK(squares == 31);
  CHECK(weighted == 56);
  CHECK(g_dim(3, 3, {2, 1}) == 3);
  CHECK_THROWS_AS(g_dim(3, 6, {3, 1, 1, 1}), std::invalid_argument);
  for (int k = 0; k <= 6; ++k) {
    for (int n = 1; n <= 8; ++n) {
      BigInt total = 0;
      for (const auto& lambda : par_sph(k, n)) {
        CHECK(g_dim(k, n, lambda) >= 1);
        total += std_count(lambda) * g_dim(k, n, lambda);
      }
      CHECK(total == binomial(k + n - 1, k));
    }
  }
}

TEST_CASE("n-pair successors") {
  CHECK(n_pair_successor({1}, 3) == Partition{3});
  CHECK_FALSE(n_pair_successor({2, 1}, 2).has_value());
  std::vector<int> admissible;
  for (int n = -3; n <= 8; ++n) {
    if (n_pair_successor({2, 1}, n)) admissible.push_back(n);
  }
  CHECK(admissible == std::vector<int>{1, 3, 5, 6, 7, 8});

  for (int size = 0; size <= 8; ++size) {
    for (const auto& lambda : enumerate_partitions(size)) {
      for (int n = -2; n <= 20; ++n) {
        const auto mine = n_pair_successor(lambda, n);
        const auto all = oracle::n_pair_successors(lambda.parts(), n, 21);
        CHECK(all.size() <= 1);
        CHECK(mine.has_value() == (all.size() == 1));
        if (mine && all.size() == 1) CHECK(mine->parts() == all.front());
      }
    }
  }
}

TEST_CASE("maximal chains") {
  const auto sph3 = build_poset(3, PosetKind::Spherical);
  CHECK(maximal_chain({1}, 3, sph3).partitions == std::vector<Partition>{{1}, {3}});
  CHECK(maximal_chain({3}, 3, sph3).partitions == std::vector<Partition>{{3}});
  CHECK_THROWS_AS(maximal_chain({1, 1, 1}, 3, sph3), std::invalid_argument);

  for (int k = 1; k <= 6; ++k) {
    for (auto kind : {PosetKind::Full, PosetKind::Spherical}) {
      const LabeledPoset poset(k, kind);
      for (int n = 1; n <= 2 * k; ++n) {
        std::map<Partition, int> seen;
        for (const auto& lambda : poset.elements()) {
          const auto chain = block_chain(lambda, n, poset);
          for (std::size_t i = 0; i + 1 < chain.partitions.size(); ++i) {
            CHECK(n_pair_successor(chain.partitions[i], n) == chain.partitions[i + 1]);
          }
          const auto next = n_pair_successor(chain.partitions.back(), n);
          CHECK((!next || !poset.contains(*next)));
          if (chain.partitions.front() == lambda) {
            for (const auto& mu : chain.partitions) ++seen[mu];
          }
        }
        CHECK(seen.size() == poset.elements().size());
        for (const auto& [mu, count] : seen) CHECK(count == 1);
      }
    }
  }
}

TEST_CASE("decomposition report invariants") {
  for (int k = 1; k <= 6; ++k) {
    for (auto kind : {PosetKind::Full, PosetKind::Spherical}) {
      const LabeledPoset poset(k, kind);
      for (int n = 1; n <= 2 * k + 2; ++n) {
        const auto r = decomposition_report(k, n, kind);
        const int size = static_cast<int>(r.labels.size());
        bool identity = true;
        for (int row = 0; row < size; ++row) {
          CHECK(r.matrix[row][row] == 1);
          BigInt rebuilt = 0;
          for (int col = 0; col < size; ++col) {
            const int m = r.matrix[row][col];
            CHECK((m == 0 || m == 1));
            if (m && col != row) {
              identity = false;
              CHECK(poset.less(r.labels[col], r.labels[row]));
            }
            rebuilt += BigInt(m) * r.simple_dims[col];
          }
          CHECK(rebuilt == r.cell_dims[row]);
          CHECK(r.simple_dims[row] > 0);
        }
        for (int col = 0; col < size; ++col) {
          int nonzero = 0;
          for (int row = 0; row < size; ++row) nonzero += r.matrix[row][col] != 0;
          CHECK(nonzero <= 2);
        }
        if (kind == PosetKind::Spherical) CHECK(identity == (n >= 2 * k - 1));
        if (n >= 2 * k - 1) CHECK(r.simple_dims == r.cell_dims);
      }
    }
  }
  CHECK_THROWS_AS(decomposition_report(3, 0, PosetKind::Spherical), std::invalid_argument);
}

TEST_CASE("worked example at k = n = 3") {
  const auto r = decomposition_report(3, 3, PosetKind::Spherical);
  auto index = [&](const Partition& p) {
    return static_cast<int>(std::find(r.labels.begin(), r.labels.end(), p) - r.labels.begin());
  };
  CHECK(r.cell_dims[index({1})] == 4);
  CHECK(r.cell_dims[index({3})] == 1);
  CHECK(r.simple_dims[index({1})] == 3);
  CHECK(std::find(r.chains.begin(), r.chains.end(), std::vector<int>{index({1}), index({3})}) != r.chains.end());
  CHECK(r.matrix[index({1})][index({3})] == 1);
}

TEST_CASE("loewy and tilting descriptors") {
  NPairChain single{3, {{2}}, true, std::nullopt};
  CHECK(projective_descriptor(single, 0) == LoewyLayers{{{2}}});
  const auto t1 = tilting_descriptor(single, 0);
  CHECK(t1.kind == TiltingDescriptor::Kind::Standard);
  CHECK(t1.layers == LoewyLayers{{{2}}});

  NPairChain two{3, {{1}, {3}}, true, std::nullopt};
  CHECK(projective_descriptor(two, 0) == LoewyLayers{{{1}}, {{3}}});
  CHECK(projective_descriptor(two, 1) == LoewyLayers{{{3}}, {{1}}, {{3}}});
  const auto t = tilting_descriptor(two, 0);
  CHECK(t.kind == TiltingDescriptor::Kind::Projective);
  CHECK(t.label == Partition{3});
  CHECK(t.layers == LoewyLayers{{{3}}, {{1}}, {{3}}});
  CHECK(tilting_descriptor(two, 1).kind == TiltingDescriptor::Kind::Standard);

  NPairChain three{1, {{}, {1}, {1, 1}}, true, std::nullopt};
  CHECK(projective_descriptor(three, 1) == LoewyLayers{{{1}}, {{}, {1, 1}}, {{1}}});
  CHECK_THROWS_AS(projective_descriptor(three, 3), std::invalid_argument);
  CHECK_THROWS_AS(tilting_descriptor(three, -1), std::invalid_argument);
}

TEST_CASE("conjecture scan") {
  for (const auto& row : conjecture_check(3, 3)) {
    if (row.lambda == Partition{2, 1}) {
      CHECK(row.g_dim == 3);
      CHECK(row.simple_dim == 3);
    }
  }
  for (int k = 1; k <= 6; ++k) {
    for (int n = 1; n <= 2 * k; ++n) {
      for (const auto& row : conjecture_check(k, n)) CHECK(row.equal);
    }
    for (int n = 2 * k; n <= 2 * k + 2; ++n) {
      for (const auto& row : conjecture_check(k, n)) CHECK(row.g_dim == sph_cell_dim(k, row.lambda_bar));
    }
  }
  CHECK_THROWS_AS(conjecture_check(3, 0), std::invalid_argument);
}

TEST_CASE("semisimplicity") {
  CHECK(is_semisimple(3, Rational(7), true) == Semisimplicity::Semisimple);
  CHECK(is_semisimple(3, Rational(2), true) == Semisimplicity::NotSemisimple);
  CHECK(is_semisimple(3, Rational(1, 2), true) == Semisimplicity::Semisimple);
  CHECK(is_semisimple(3, Rational(0), true) == Semisimplicity::Unknown);
  CHECK(is_semisimple(3, Rational(0), false) == Semisimplicity::NotSemisimple);
  CHECK(is_semisimple(3, Rational(4), false) == Semisimplicity::NotSemisimple);
  CHECK(is_semisimple(3, Rational(5), false) == Semisimplicity::Semisimple);
  CHECK(is_semisimple(3, Rational(-1), false) == Semisimplicity::Semisimple);
}
