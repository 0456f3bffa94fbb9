#include "nsc/capacity.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nsc/math.hpp"

namespace nsc {

namespace {

void check_p_beta(double p, double beta) {
  if (!(p >= 0.0 && p <= 0.5)) {
    throw std::domain_error("capacity: p must be in [0, 0.5]");
  }
  if (!(beta > 0.0)) throw std::domain_error("capacity: beta must be positive");
}

}  // namespace

double capacity_noisy_shuffle(double p, double beta) {
  check_p_beta(p, beta);
  if (beta <= 1.0) return 0.0;
  const double c = 1.0 - binary_entropy(p) - 1.0 / beta;
  return c > 0.0 ? c : 0.0;
}

double capacity_upper_bound(double p, double beta) {
  check_p_beta(p, beta);
  const double c = std::min(1.0 - binary_entropy(p), 1.0 - 1.0 / beta);
  return c > 0.0 ? c : 0.0;
}

double capacity_sampled_shuffle(double c, double beta) {
  if (!(c > 0.0)) throw std::domain_error("capacity: c must be positive");
  if (!(beta > 0.0)) throw std::domain_error("capacity: beta must be positive");
  if (beta <= 1.0) return 0.0;
  return (1.0 - std::exp(-c)) * (1.0 - 1.0 / beta);
}

double capacity_sdmc_shuffle(const DmcSpec& dmc, double beta) {
  if (!(beta > 0.0)) throw std::domain_error("capacity: beta must be positive");
  if (!dmc.symmetric()) {
    throw std::domain_error("capacity_sdmc_shuffle: channel must be symmetric");
  }
  const double log_y = std::log2(static_cast<double>(dmc.output_alphabet()));
  if (beta <= log_y) return 0.0;
  const double c = log_y - dmc.row_entropy() - 1.0 / beta;
  return c > 0.0 ? c : 0.0;
}

const char* region_name(Region r) {
  switch (r) {
    case Region::Achieved: return "achieved";
    case Region::Unknown: return "unknown";
    case Region::Zero: return "zero";
  }
  return "?";
}

RegionClass classify_region(double p, double beta) {
  check_p_beta(p, beta);
  // the condition needs some alpha in (2p, 1/2]; once 2p >= 1/2 no such
  // alpha exists and the effective H(2p) saturates at 1
  const double h2p = p < 0.25 ? binary_entropy(2.0 * p) : 1.0;
  const double margin = 1.0 - h2p - 2.0 / beta;
  RegionClass rc{};
  rc.margin = margin;
  rc.in_theorem1_rectangle = p <= 0.1 && beta >= 6.4;
  if (beta <= 1.0) {
    rc.label = Region::Zero;
    rc.witness = beta - 1.0;
  } else if (margin > 0.0) {
    rc.label = Region::Achieved;
    rc.witness = margin;
  } else {
    rc.label = Region::Unknown;
    rc.witness = margin;
  }
  return rc;
}

double region_boundary_beta(double p) {
  if (!(p >= 0.0 && p <= 0.5)) {
    throw std::domain_error("region_boundary_beta: p must be in [0, 0.5]");
  }
  const double h2p = p < 0.25 ? binary_entropy(2.0 * p) : 1.0;
  const double denom = 1.0 - h2p;
  if (denom <= 0.0) return std::numeric_limits<double>::infinity();
  return 2.0 / denom;
}

std::vector<RegionGridRow> region_grid(double p_min, double p_max,
                                       std::size_t p_steps, double beta_min,
                                       double beta_max, std::size_t beta_steps,
                                       bool parallel) {
  if (!(p_min > 0.0 && p_min <= p_max && p_max <= 0.5)) {
    throw std::invalid_argument("region_grid: need 0 < p_min <= p_max <= 0.5");
  }
  if (!(beta_min > 0.0 && beta_min <= beta_max)) {
    throw std::invalid_argument("region_grid: need 0 < beta_min <= beta_max");
  }
  if (p_steps < 1 || beta_steps < 1) {
    throw std::invalid_argument("region_grid: steps must be >= 1");
  }
  const double lp0 = std::log(p_min);
  const double lp1 = std::log(p_max);
  std::vector<RegionGridRow> rows(p_steps * beta_steps);
  const auto total = static_cast<std::int64_t>(rows.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (std::int64_t idx = 0; idx < total; ++idx) {
    const std::size_t i = static_cast<std::size_t>(idx) / beta_steps;
    const std::size_t j = static_cast<std::size_t>(idx) % beta_steps;
    const double p =
        p_steps == 1 ? p_min
                     : std::exp(lp0 + (lp1 - lp0) * static_cast<double>(i) /
                                          static_cast<double>(p_steps - 1));
    const double beta =
        beta_steps == 1
            ? beta_min
            : beta_min + (beta_max - beta_min) * static_cast<double>(j) /
                             static_cast<double>(beta_steps - 1);
    const auto rc = classify_region(p, beta);
    rows[idx] = {p, beta, rc.label, rc.margin, region_boundary_beta(p)};
  }
  (void)parallel;
  return rows;
}

std::string region_grid_csv(const std::vector<RegionGridRow>& rows) {
  std::ostringstream os;
  os.precision(12);
  os << "schema_version,p,beta,region,margin,boundary_beta\n";
  for (const auto& r : rows) {
    os << 1 << ',' << r.p << ',' << r.beta << ',' << region_name(r.label) << ','
       << r.margin << ',' << r.boundary_beta << '\n';
  }
  return os.str();
}

}  // namespace nsc
