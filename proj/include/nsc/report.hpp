#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nsc/oracle.hpp"
#include "nsc/simulate.hpp"

namespace nsc {

inline constexpr int kSchemaVersion = 1;

/// The JSON emitted by `nsc capacity`.
nlohmann::json capacity_report(double p, double beta, std::optional<double> c,
                               std::optional<unsigned> q);

/// Canonical simulate report. wall_seconds only appears when include_timing
/// is set: timing is not a function of (seed, config) and would break the
/// byte-identical reproducibility contract.
nlohmann::json sim_report_json(const SimReport& rep, bool include_timing = false);

nlohmann::json bound_report_json(const BoundReport& rep);

std::string sweep_csv(const std::vector<SimReport>& reports);

/// Summary of a decode run for the CLI (statuses histogram, frame_ok).
nlohmann::json decode_report_json(const DecodeReport& rep);

}  // namespace nsc
