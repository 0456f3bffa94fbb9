#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nsc/channel.hpp"

namespace nsc {

/// Capacity of the BSC-shuffling channel: max(0, 1 - H(p) - 1/beta).
/// Zero for beta <= 1. p in [0, 0.5], beta > 0.
double capacity_noisy_shuffle(double p, double beta);

/// min(1 - H(p), 1 - 1/beta), floored at 0.
double capacity_upper_bound(double p, double beta);

/// Sampled shuffling channel (no substitution noise):
/// (1 - e^{-c}) (1 - 1/beta), zero for beta <= 1.
double capacity_sampled_shuffle(double c, double beta);

/// Symmetric-DMC shuffling channel: C_SDMC - 1/beta where
/// C_SDMC = log2|Y| - H(row). Zero for beta <= log2|Y|.
/// Throws std::domain_error when the channel is not symmetric.
double capacity_sdmc_shuffle(const DmcSpec& dmc, double beta);

enum class Region { Achieved, Unknown, Zero };
const char* region_name(Region r);

struct RegionClass {
  Region label;
  double margin;   // 1 - H(2p) - 2/beta, the achievability condition
  double witness;  // margin for Achieved/Unknown; beta - 1 for Zero
  bool in_theorem1_rectangle;  // p <= 0.1 and beta >= 6.4, diagnostic only
};

/// Zero iff beta <= 1; Achieved iff beta > 1 and the margin is positive;
/// Unknown otherwise. The rectangle flag is reported separately and never
/// drives the classification.
RegionClass classify_region(double p, double beta);

/// Smallest beta at which the achievability condition holds for this p:
/// 2 / (1 - H(2p)). +inf once H(2p) >= 1 (p >= 0.25).
double region_boundary_beta(double p);

struct RegionGridRow {
  double p, beta;
  Region label;
  double margin;
  double boundary_beta;
};

/// p sampled log-uniformly over [p_min, p_max], beta linearly.
/// Deterministic row order: p-major, beta minor.
std::vector<RegionGridRow> region_grid(double p_min, double p_max,
                                       std::size_t p_steps, double beta_min,
                                       double beta_max, std::size_t beta_steps,
                                       bool parallel = true);

std::string region_grid_csv(const std::vector<RegionGridRow>& rows);

}  // namespace nsc
