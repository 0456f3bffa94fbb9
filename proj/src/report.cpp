#include "nsc/report.hpp"

#include <sstream>

#include "nsc/capacity.hpp"

namespace nsc {

using nlohmann::json;

json capacity_report(double p, double beta, std::optional<double> c,
                     std::optional<unsigned> q) {
  const auto rc = classify_region(p, beta);
  json out{
      {"schema_version", kSchemaVersion},
      {"p", p},
      {"beta", beta},
      {"capacity", capacity_noisy_shuffle(p, beta)},
      {"upper_bound", capacity_upper_bound(p, beta)},
      {"region", region_name(rc.label)},
      {"margin", rc.margin},
      {"witness", rc.witness},
      {"in_theorem1_rectangle", rc.in_theorem1_rectangle},
      {"boundary_beta", region_boundary_beta(p)},
  };
  if (c) out["sampled_capacity"] = capacity_sampled_shuffle(*c, beta);
  if (q) {
    out["q"] = *q;
    out["sdmc_capacity"] =
        capacity_sdmc_shuffle(DmcSpec::q_symmetric(*q, p), beta);
  }
  return out;
}

json sim_report_json(const SimReport& rep, bool include_timing) {
  json out{
      {"schema_version", kSchemaVersion},
      {"m", rep.params.m},
      {"beta", rep.params.beta},
      {"l", rep.params.l()},
      {"q", rep.params.q},
      {"p", rep.params.p},
      {"inner", rep.inner_name},
      {"outer_redundancy", rep.outer_redundancy},
      {"trials", rep.trials},
      {"frame_errors", rep.frame_errors},
      {"fer", rep.fer},
      {"fer_wilson_lo", rep.fer_ci.lo},
      {"fer_wilson_hi", rep.fer_ci.hi},
      {"achieved_rate", rep.achieved_rate},
      {"capacity", rep.capacity},
      {"capacity_gap", rep.capacity_gap},
      {"seed", rep.seed},
  };
  if (rep.params.c) out["c"] = *rep.params.c;
  if (include_timing) out["wall_seconds"] = rep.wall_seconds;
  return out;
}

json bound_report_json(const BoundReport& rep) {
  return json{
      {"schema_version", kSchemaVersion},
      {"m", rep.m},
      {"l", rep.l},
      {"p", rep.p},
      {"alpha", rep.alpha},
      {"delta", rep.delta},
      {"codebook_size", rep.codebook_size},
      {"h_y", rep.h_y},
      {"h_y_given_x", rep.h_y_given_x},
      {"i_xy", rep.i_xy},
      {"h_x_given_y", rep.h_x_given_y},
      {"h_s_given_xy", rep.h_s_given_xy},
      {"h_szy_given_x", rep.h_szy_given_x},
      {"chain_rule_value", rep.chain_rule_value},
      {"eps_fano", rep.eps_fano},
      {"e_t", rep.e_t},
      {"e_tlogt", rep.e_tlogt},
      {"chernoff_sum", rep.chernoff_sum},
      {"b1_rhs", rep.b1_rhs},
      {"b1_rhs_jensen", rep.b1_rhs_jensen},
      {"b2_rhs", rep.b2_rhs},
      {"b2_rhs_jensen", rep.b2_rhs_jensen},
      {"slack_b1", rep.slack_b1},
      {"slack_b1_jensen", rep.slack_b1_jensen},
      {"slack_b2", rep.slack_b2},
      {"slack_b2_jensen", rep.slack_b2_jensen},
      {"bounds_hold", rep.bounds_hold},
  };
}

std::string sweep_csv(const std::vector<SimReport>& reports) {
  std::ostringstream os;
  os.precision(12);
  os << "schema_version,m,beta,l,p,c,inner,outer_redundancy,trials,"
        "frame_errors,fer,fer_wilson_lo,fer_wilson_hi,achieved_rate,"
        "capacity,capacity_gap,seed\n";
  for (const auto& rep : reports) {
    os << kSchemaVersion << ',' << rep.params.m << ',' << rep.params.beta << ','
       << rep.params.l() << ',' << rep.params.p << ',';
    if (rep.params.c) os << *rep.params.c;
    os << ',' << rep.inner_name << ',' << rep.outer_redundancy << ','
       << rep.trials << ',' << rep.frame_errors << ',' << rep.fer << ','
       << rep.fer_ci.lo << ',' << rep.fer_ci.hi << ',' << rep.achieved_rate
       << ',' << rep.capacity << ',' << rep.capacity_gap << ',' << rep.seed
       << '\n';
  }
  return os.str();
}

json decode_report_json(const DecodeReport& rep) {
  std::size_t ok = 0, missing = 0, collision = 0, corrected = 0;
  for (auto s : rep.status) {
    switch (s) {
      case StringStatus::Ok: ++ok; break;
      case StringStatus::ErasedMissing: ++missing; break;
      case StringStatus::ErasedCollision: ++collision; break;
      case StringStatus::OuterCorrected: ++corrected; break;
    }
  }
  return json{
      {"schema_version", kSchemaVersion},
      {"frame_ok", rep.frame_ok},
      {"payload_bits", rep.payload.size()},
      {"dropped", rep.dropped},
      {"ok", ok},
      {"erased_missing", missing},
      {"erased_collision", collision},
      {"outer_corrected", corrected},
  };
}

}  // namespace nsc
