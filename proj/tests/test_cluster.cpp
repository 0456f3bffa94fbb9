#include <algorithm>
#include <bit>
#include <vector>

#include "doctest.h"
#include "nsc/cluster.hpp"
#include "nsc/math.hpp"
#include "nsc/rng.hpp"

using namespace nsc;

namespace {

Pool random_pool(std::size_t m, std::size_t l, Rng& rng) {
  Pool pool(m, l, 2);
  for (auto& s : pool.data()) s = static_cast<Symbol>(rng.next() & 1U);
  return pool;
}

bool pairwise_valid(const Pool& pool, const std::vector<std::uint32_t>& set,
                    double alpha) {
  const unsigned thr = distance_threshold(alpha, static_cast<unsigned>(pool.l()));
  for (std::size_t i = 0; i < set.size(); ++i) {
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      if (hamming_distance(pool.row(set[i]), pool.row(set[j])) < thr) return false;
    }
  }
  return true;
}

// independent oracle: scan all subsets
std::size_t naive_max_cluster(const Pool& pool, double alpha) {
  const unsigned thr = distance_threshold(alpha, static_cast<unsigned>(pool.l()));
  std::size_t best = 0;
  for (std::uint32_t sub = 1; sub < (1U << pool.m()); ++sub) {
    bool ok = true;
    for (std::size_t i = 0; ok && i < pool.m(); ++i) {
      if (!(sub >> i & 1U)) continue;
      for (std::size_t j = i + 1; ok && j < pool.m(); ++j) {
        if (!(sub >> j & 1U)) continue;
        ok = hamming_distance(pool.row(i), pool.row(j)) >= thr;
      }
    }
    if (ok) best = std::max<std::size_t>(best, std::popcount(sub));
  }
  return best;
}

}  // namespace

TEST_CASE("cluster set on tiny hand-checked pools") {
  Pool two = Pool::from_strings({{0, 0, 0}, {1, 1, 1}}, 2);
  auto t = cluster_set(two, 0.5, ClusterMode::Exact);
  CHECK(t.indices == std::vector<std::uint32_t>{0, 1});
  CHECK(t.exact);

  // {000, 001, 111}: only pairs at distance >= 2 survive; lexicographic
  // minimum of the maximum sets is {0, 2}
  Pool three = Pool::from_strings({{0, 0, 0}, {0, 0, 1}, {1, 1, 1}}, 2);
  t = cluster_set(three, 0.5, ClusterMode::Exact);
  CHECK(t.indices == std::vector<std::uint32_t>{0, 2});

  // identical strings: singleton
  Pool same(6, 4, 2);
  t = cluster_set(same, 0.25, ClusterMode::Exact);
  CHECK(t.indices.size() == 1);
  t = cluster_set(same, 0.25, ClusterMode::Greedy);
  CHECK(t.indices.size() == 1);
}

TEST_CASE("exact matches a naive all-subsets scan (m <= 10)") {
  Rng rng(61);
  for (int round = 0; round < 300; ++round) {
    const std::size_t m = 2 + rng.below(9);
    const std::size_t l = 3 + rng.below(6);
    const double alpha = 0.2 + 0.3 * rng.unit();
    Pool pool = random_pool(m, l, rng);
    auto exact = cluster_set(pool, alpha, ClusterMode::Exact);
    CHECK(exact.indices.size() == naive_max_cluster(pool, alpha));
    CHECK(pairwise_valid(pool, exact.indices, alpha));
  }
}

TEST_CASE("exact dominates greedy; both are valid (m <= 12)") {
  Rng rng(67);
  for (int round = 0; round < 1000; ++round) {
    const std::size_t m = 2 + rng.below(11);
    const std::size_t l = 3 + rng.below(8);
    const double alpha = 0.15 + 0.35 * rng.unit();
    Pool pool = random_pool(m, l, rng);
    auto exact = cluster_set(pool, alpha, ClusterMode::Exact);
    auto greedy = cluster_set(pool, alpha, ClusterMode::Greedy);
    CHECK(pairwise_valid(pool, exact.indices, alpha));
    CHECK(pairwise_valid(pool, greedy.indices, alpha));
    CHECK(exact.indices.size() >= greedy.indices.size());
  }
}

TEST_CASE("exact mode refuses pools beyond the branch-and-bound cap") {
  Pool big(25, 4, 2);
  CHECK_THROWS(cluster_set(big, 0.5, ClusterMode::Exact));
  CHECK_NOTHROW(cluster_set(big, 0.5, ClusterMode::Greedy));
}

TEST_CASE("partition_a_sets covers every index exactly once") {
  // identity channel: cluster of everything maps each j to itself
  Rng rng(71);
  Pool x = random_pool(8, 6, rng);
  auto cluster = cluster_set(x, 1.0 / 6.0, ClusterMode::Exact);
  auto a_sets = partition_a_sets(x, x, cluster);
  std::vector<int> hit(8, 0);
  for (const auto& set : a_sets) {
    for (auto j : set) hit[j] += 1;
  }
  for (int h : hit) CHECK(h == 1);

  // single-element cluster absorbs everything
  ClusterSet solo{{3}, 0.5, false};
  auto all = partition_a_sets(x, x, solo);
  CHECK(all.size() == 1);
  CHECK(all[0].size() == 8);

  // p = 0, all rows distinct, cluster = everything: A_i = {i}
  Pool distinct = Pool::from_strings(
      {{0, 0, 0}, {1, 1, 1}, {0, 1, 1}, {1, 0, 0}}, 2);
  ClusterSet full{{0, 1, 2, 3}, 0.3, true};
  auto sets = partition_a_sets(distinct, distinct, full);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(sets[i] == std::vector<std::uint32_t>{static_cast<std::uint32_t>(i)});
  }
}

TEST_CASE("partition on a hand-computed 3-row instance") {
  // y rows: 0000, 1111, 0011 ; x rows: 0001, 1110, 0111
  Pool y = Pool::from_strings({{0, 0, 0, 0}, {1, 1, 1, 1}, {0, 0, 1, 1}}, 2);
  Pool x = Pool::from_strings({{0, 0, 0, 1}, {1, 1, 1, 0}, {0, 1, 1, 1}}, 2);
  ClusterSet cluster{{0, 1}, 0.5, true};
  // d(y0,x0)=1 d(y1,x0)=3 -> x0 to 0 ; d(y0,x1)=3 d(y1,x1)=1 -> x1 to 1
  // d(y0,x2)=3 d(y1,x2)=1 -> x2 to 1
  auto sets = partition_a_sets(x, y, cluster);
  CHECK(sets[0] == std::vector<std::uint32_t>{0});
  CHECK(sets[1] == std::vector<std::uint32_t>{1, 2});

  ClusterSet empty{{}, 0.5, true};
  CHECK_THROWS(partition_a_sets(x, y, empty));
}
