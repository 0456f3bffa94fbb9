#pragma once

#include <cstdint>
#include <vector>

#include "nsc/pool.hpp"

namespace nsc {

enum class ClusterMode { Exact, Greedy };

struct ClusterSet {
  std::vector<std::uint32_t> indices;  // ascending
  double alpha = 0.0;
  bool exact = false;
};

/// Largest subset of pool rows with pairwise Hamming distance >=
/// ceil(alpha * L). Exact mode runs branch-and-bound over the compatibility
/// graph and returns the lexicographically smallest maximum subset; it
/// refuses pools with more than 24 rows. Greedy mode is farthest-first
/// insertion seeded at row 0, ties broken towards the smallest index.
ClusterSet cluster_set(const Pool& pool, double alpha, ClusterMode mode);

/// A_i = { j : cluster row i is the closest of the cluster's output rows to
/// x row j }, ties broken towards the smaller cluster index. The result is
/// aligned with cluster.indices and partitions [0, M).
std::vector<std::vector<std::uint32_t>> partition_a_sets(const Pool& x_pool,
                                                         const Pool& y_pool,
                                                         const ClusterSet& cluster);

}  // namespace nsc
