#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nsc/codec.hpp"
#include "nsc/params.hpp"

namespace nsc {

struct WilsonInterval {
  double lo = 0.0, hi = 0.0;
};

/// 95% Wilson score interval by default.
WilsonInterval wilson_interval(std::size_t errors, std::size_t trials,
                               double z = 1.959963984540054);

struct SimReport {
  ChannelParams params;
  std::string inner_name;
  std::size_t outer_redundancy = 0;
  std::size_t trials = 0;
  std::size_t frame_errors = 0;
  double fer = 0.0;
  WilsonInterval fer_ci;
  double achieved_rate = 0.0;
  double capacity = 0.0;      // capacity_noisy_shuffle at (p, beta)
  double capacity_gap = 0.0;  // capacity - achieved_rate
  std::uint64_t seed = 0;
  double wall_seconds = 0.0;  // measurement only; kept out of canonical output
};

/// encode -> corrupt -> shuffle [-> sample] -> decode, one independent
/// generator per trial derived from (seed, trial). A frame counts as an
/// error unless the decoded payload matches the transmitted one exactly.
/// Trial outcomes are counts, so the parallel path aggregates identically
/// to the serial one.
SimReport simulate(const ChannelParams& params, const CodeSpec& spec,
                   std::size_t trials, std::uint64_t seed, bool parallel = true);

enum class SweepVariable { P, Beta, Redundancy };
SweepVariable parse_sweep_variable(const std::string& name);

/// One SimReport per value; point i uses master seed derive_seed(seed, i).
std::vector<SimReport> sweep(SweepVariable variable,
                             const std::vector<double>& values,
                             ChannelParams base, CodeSpec spec,
                             std::size_t trials, std::uint64_t seed,
                             bool parallel = true);

}  // namespace nsc
