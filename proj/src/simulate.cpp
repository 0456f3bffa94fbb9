#include "nsc/simulate.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "nsc/capacity.hpp"
#include "nsc/channel.hpp"
#include "nsc/rng.hpp"

namespace nsc {

WilsonInterval wilson_interval(std::size_t errors, std::size_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(errors) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half =
      z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
  WilsonInterval ci{std::max(0.0, center - half), std::min(1.0, center + half)};
  if (errors == 0) ci.lo = 0.0;
  if (errors == trials) ci.hi = 1.0;
  return ci;
}

namespace {

bool run_trial(const ChannelParams& params, const CodeSpec& spec,
               std::size_t net_bits, std::uint64_t trial_seed) {
  Rng rng(trial_seed);
  std::vector<std::uint8_t> payload(net_bits);
  for (auto& b : payload) b = static_cast<std::uint8_t>(rng.next() & 1U);
  Pool pool = encode(payload, spec, params);
  auto received = transmit(pool, params, rng);
  const DecodeReport report = decode(received.output, spec, params);
  return !(report.frame_ok && report.payload == payload);
}

}  // namespace

SimReport simulate(const ChannelParams& params, const CodeSpec& spec,
                   std::size_t trials, std::uint64_t seed, bool parallel) {
  if (trials < 1) throw std::invalid_argument("simulate: trials must be >= 1");
  const auto lay = spec.layout(params);  // throws on infeasible specs

  const auto start = std::chrono::steady_clock::now();
  std::size_t errors = 0;
  const auto n = static_cast<std::int64_t>(trials);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : errors) if (parallel)
#endif
  for (std::int64_t t = 0; t < n; ++t) {
    errors += run_trial(params, spec, lay.net_payload_bits,
                        derive_seed(seed, static_cast<std::uint64_t>(t)))
                  ? 1U
                  : 0U;
  }
  (void)parallel;
  const auto stop = std::chrono::steady_clock::now();

  SimReport rep;
  rep.params = params;
  rep.inner_name = spec.inner.name();
  rep.outer_redundancy = spec.outer_redundancy;
  rep.trials = trials;
  rep.frame_errors = errors;
  rep.fer = static_cast<double>(errors) / static_cast<double>(trials);
  rep.fer_ci = wilson_interval(errors, trials);
  rep.achieved_rate = achieved_rate(spec, params);
  rep.capacity = capacity_noisy_shuffle(params.p, params.beta);
  rep.capacity_gap = rep.capacity - rep.achieved_rate;
  rep.seed = seed;
  rep.wall_seconds = std::chrono::duration<double>(stop - start).count();
  return rep;
}

SweepVariable parse_sweep_variable(const std::string& name) {
  if (name == "p") return SweepVariable::P;
  if (name == "beta") return SweepVariable::Beta;
  if (name == "r") return SweepVariable::Redundancy;
  throw std::invalid_argument("sweep variable must be one of p, beta, r");
}

std::vector<SimReport> sweep(SweepVariable variable,
                             const std::vector<double>& values,
                             ChannelParams base, CodeSpec spec,
                             std::size_t trials, std::uint64_t seed,
                             bool parallel) {
  std::vector<SimReport> reports;
  reports.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    ChannelParams params = base;
    CodeSpec point_spec = spec;
    switch (variable) {
      case SweepVariable::P: params.p = values[i]; break;
      case SweepVariable::Beta: params.beta = values[i]; break;
      case SweepVariable::Redundancy:
        point_spec.outer_redundancy =
            static_cast<std::size_t>(std::llround(values[i]));
        break;
    }
    reports.push_back(
        simulate(params, point_spec, trials, derive_seed(seed, i), parallel));
  }
  return reports;
}

}  // namespace nsc
