#include "nsc/cluster.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>

#include "nsc/math.hpp"

namespace nsc {

namespace {

// max-clique branch and bound on an adjacency-bitmask graph, size cap 24
struct CliqueSolver {
  const std::vector<std::uint32_t>& adj;

  unsigned best = 0;

  void expand(std::uint32_t cand, unsigned size) {
    if (size + static_cast<unsigned>(std::popcount(cand)) <= best) return;
    if (cand == 0) {
      best = std::max(best, size);
      return;
    }
    const auto v = static_cast<unsigned>(std::countr_zero(cand));
    cand &= cand - 1;
    expand(cand & adj[v], size + 1);  // take v
    expand(cand, size);               // skip v
  }

  unsigned max_size(std::uint32_t cand) {
    best = 0;
    expand(cand, 0);
    return best;
  }
};

std::vector<std::uint32_t> compatibility(const Pool& pool, unsigned threshold) {
  const std::size_t m = pool.m();
  std::vector<std::uint32_t> adj(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (hamming_distance(pool.row(i), pool.row(j)) >= threshold) {
        adj[i] |= 1U << j;
        adj[j] |= 1U << i;
      }
    }
  }
  return adj;
}

}  // namespace

ClusterSet cluster_set(const Pool& pool, double alpha, ClusterMode mode) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw std::invalid_argument("cluster_set: alpha must be in (0, 1]");
  }
  const std::size_t m = pool.m();
  const unsigned threshold =
      distance_threshold(alpha, static_cast<unsigned>(pool.l()));
  ClusterSet result;
  result.alpha = alpha;

  if (mode == ClusterMode::Greedy) {
    // farthest-first: grow from row 0, always inserting the row farthest
    // from the current set (by min distance), while it stays compatible
    std::vector<bool> in_set(m, false);
    std::vector<std::size_t> min_dist(m, std::numeric_limits<std::size_t>::max());
    result.indices.push_back(0);
    in_set[0] = true;
    for (;;) {
      const std::uint32_t last = result.indices.back();
      std::size_t best_j = m;
      std::size_t best_d = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (in_set[j]) continue;
        min_dist[j] = std::min(min_dist[j],
                               hamming_distance(pool.row(last), pool.row(j)));
        if (min_dist[j] > best_d) {
          best_d = min_dist[j];
          best_j = j;
        }
      }
      if (best_j == m || best_d < threshold) break;
      result.indices.push_back(static_cast<std::uint32_t>(best_j));
      in_set[best_j] = true;
    }
    std::sort(result.indices.begin(), result.indices.end());
    return result;
  }

  if (m > 24) {
    throw std::invalid_argument("cluster_set: exact mode is capped at 24 rows");
  }
  result.exact = true;
  const auto adj = compatibility(pool, threshold);
  CliqueSolver solver{adj};
  const std::uint32_t all = (1U << m) - 1U;
  const unsigned opt = solver.max_size(all);

  // lexicographically smallest maximum subset: force the lowest usable
  // vertex, then recurse on vertices above it
  std::uint32_t cand = all;
  unsigned chosen = 0;
  for (unsigned v = 0; v < m && chosen < opt; ++v) {
    if (!(cand >> v & 1U)) continue;
    const std::uint32_t rest = cand & adj[v] & ~((1U << (v + 1)) - 1U);
    if (chosen + 1 + solver.max_size(rest) == opt) {
      result.indices.push_back(v);
      ++chosen;
      cand = rest;
    }
  }
  return result;
}

std::vector<std::vector<std::uint32_t>> partition_a_sets(const Pool& x_pool,
                                                         const Pool& y_pool,
                                                         const ClusterSet& cluster) {
  if (x_pool.m() != y_pool.m() || x_pool.l() != y_pool.l()) {
    throw std::invalid_argument("partition_a_sets: pools must share a shape");
  }
  if (cluster.indices.empty()) {
    throw std::invalid_argument("partition_a_sets: empty cluster");
  }
  std::vector<std::vector<std::uint32_t>> a_sets(cluster.indices.size());
  for (std::size_t j = 0; j < x_pool.m(); ++j) {
    std::size_t best = 0;
    std::size_t best_d = std::numeric_limits<std::size_t>::max();
    for (std::size_t c = 0; c < cluster.indices.size(); ++c) {
      const std::size_t d =
          hamming_distance(y_pool.row(cluster.indices[c]), x_pool.row(j));
      if (d < best_d) {
        best_d = d;
        best = c;
      }
    }
    a_sets[best].push_back(static_cast<std::uint32_t>(j));
  }
  return a_sets;
}

}  // namespace nsc
