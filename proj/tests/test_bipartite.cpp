#include "oracles.hpp"

#include "sphpart/bipartite.hpp"

#include <doctest.h>

#include <set>

using namespace sphpart;

namespace {

std::multiset<std::pair<int, int>> as_multiset(const BiPartition& b) {
  std::multiset<std::pair<int, int>> out;
  for (const auto& p : b.parts()) out.emplace(p.top, p.bottom);
  return out;
}

}  // namespace

TEST_CASE("bipartite counts") {
  const std::vector<long> expected{1, 2, 9, 31, 109, 339};
  for (int k = 0; k <= 5; ++k) CHECK(enumerate_bipartitions(k).size() == expected[k]);
  const auto series = oracle::bp_series(8);
  for (int k = 0; k <= 8; ++k) {
    CHECK(BigInt(enumerate_bipartitions(k).size()) == series[k]);
    CHECK(bipartition_count(k) == series[k]);
  }
}

TEST_CASE("small listings") {
  const auto one = enumerate_bipartitions(1);
  REQUIRE(one.size() == 2);
  CHECK(one[0] == normalize({{1, 1}}));
  CHECK(one[1] == normalize({{1, 0}, {0, 1}}));

  CHECK(enumerate_bipartitions(0) == std::vector<BiPartition>{BiPartition{}});

  const std::set<std::multiset<std::pair<int, int>>> two_expected{
      {{2, 2}},
      {{2, 1}, {0, 1}},
      {{1, 2}, {1, 0}},
      {{2, 0}, {0, 2}},
      {{2, 0}, {0, 1}, {0, 1}},
      {{1, 0}, {1, 0}, {0, 2}},
      {{1, 1}, {1, 1}},
      {{1, 1}, {1, 0}, {0, 1}},
      {{1, 0}, {1, 0}, {0, 1}, {0, 1}},
  };
  std::set<std::multiset<std::pair<int, int>>> two;
  for (const auto& b : enumerate_bipartitions(2)) two.insert(as_multiset(b));
  CHECK(two == two_expected);
}

TEST_CASE("enumeration is duplicate free, normalized and descending") {
  for (int k = 0; k <= 8; ++k) {
    const auto all = enumerate_bipartitions(k);
    std::set<BiPartition> unique(all.begin(), all.end());
    CHECK(unique.size() == all.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      const auto& b = all[i];
      CHECK(b.order() == k);
      CHECK(normalize(b.parts()) == b);
      if (i + 1 < all.size()) CHECK(all[i] > all[i + 1]);
    }
  }
}

TEST_CASE("normal form") {
  const auto b = normalize({{1, 2}, {2, 1}, {4, 1}, {0, 2}, {0, 1}, {1, 2}, {1, 1}, {3, 2}});
  const std::vector<BiPart> expected{{4, 1}, {3, 2}, {2, 1}, {1, 2}, {1, 2}, {1, 1}, {0, 2}, {0, 1}};
  CHECK(b.parts() == expected);
  CHECK(normalize({{5, 5}}).parts() == std::vector<BiPart>{{5, 5}});
  CHECK(normalize(b.parts()) == b);
  CHECK_THROWS_AS(normalize({{0, 0}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(normalize({{2, 1}}), std::invalid_argument);
}

TEST_CASE("gg form example") {
  const auto gg = gg_form(normalize({{3, 1}, {2, 2}, {3, 2}, {0, 4}, {2, 1}}));
  CHECK(gg.lambda_top_pro == Partition{3, 3, 2, 2});
  CHECK(gg.lambda_bot_pro == Partition{2, 2, 1, 1});
  CHECK(gg.sigma == Permutation{1, 3, 2, 4});
  CHECK(gg.nonprop_bot == Partition{4});
  CHECK(gg.nonprop_top == Partition{});
  CHECK(gg.lambda_top == Partition{3, 3, 2, 2});
  CHECK(gg.lambda_bot == Partition{4, 2, 2, 1, 1});

  const auto single = gg_form(normalize({{4, 4}}));
  CHECK(single.sigma == Permutation{1});
  CHECK(single.nonprop_top.empty());
  CHECK(single.nonprop_bot.empty());

  const auto none = gg_form(normalize({{1, 0}, {0, 1}}));
  CHECK(none.sigma.size() == 0);
  CHECK(none.lambda_top_pro.empty());
}

TEST_CASE("gg form round trip and compatibility") {
  for (int k = 0; k <= 6; ++k) {
    for (const auto& b : enumerate_bipartitions(k)) {
      const auto gg = gg_form(b);
      CHECK(from_gg_form(gg) == b);
      CHECK(gg.lambda_top_pro.length() == gg.sigma.size());
      CHECK(is_sigma_compatible(gg.lambda_bot_pro, gg.sigma));
      CHECK(is_sigma_compatible(gg.lambda_top_pro, gg.sigma.inverse()));
      std::vector<int> top = gg.lambda_top_pro.parts();
      top.insert(top.end(), gg.nonprop_top.parts().begin(), gg.nonprop_top.parts().end());
      CHECK(Partition::from_unsorted(top) == gg.lambda_top);
    }
  }
}

TEST_CASE("sigma compatibility") {
  CHECK(is_sigma_compatible({2, 2, 1, 1}, Permutation{1, 3, 2, 4}));
  CHECK(is_sigma_compatible({3, 3, 3}, Permutation::identity(3)));
  CHECK_FALSE(is_sigma_compatible({2, 2}, Permutation{2, 1}));
  CHECK_THROWS_AS(is_sigma_compatible({2, 2}, Permutation{1}), std::invalid_argument);
}

TEST_CASE("matrix counting") {
  CHECK(count_matrices({3, 2}, {2, 2, 1}) == 5);
  CHECK(count_matrices({6}, {6}) == 1);
  CHECK_THROWS_AS(count_matrices({3}, {2}), std::invalid_argument);
  for (int size = 0; size <= 6; ++size) {
    for (const auto& a : enumerate_partitions(size)) {
      for (const auto& b : enumerate_partitions(size)) {
        CHECK(count_matrices(a, b) == oracle::count_matrices(a.parts(), b.parts()));
      }
    }
  }
}

TEST_CASE("matrices against kostka products") {
  for (int size = 1; size <= 7; ++size) {
    for (const auto& a : enumerate_partitions(size)) {
      for (const auto& b : enumerate_partitions(size)) {
        BigInt sum = 0;
        for (const auto& lambda : enumerate_partitions(size)) sum += kostka(lambda, a) * kostka(lambda, b);
        CHECK(sum == count_matrices(a, b));
      }
    }
  }
}
