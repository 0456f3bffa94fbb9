#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"
#include "json.hpp"
#include "nsc/capacity.hpp"
#include "nsc/channel.hpp"
#include "nsc/codec.hpp"
#include "nsc/oracle.hpp"
#include "nsc/report.hpp"
#include "nsc/simulate.hpp"

using nlohmann::json;

namespace {

struct GlobalOpts {
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0 = library default
  std::string out;       // empty = stdout
  std::string format = "default";
};

void emit(const GlobalOpts& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(g.out, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open output file " + g.out);
  os << text;
}

void apply_threads(const GlobalOpts& g) {
#ifdef _OPENMP
  if (g.threads > 0) omp_set_num_threads(static_cast<int>(g.threads));
#else
  (void)g;
#endif
}

std::vector<std::uint8_t> read_payload_bits(const std::string& path,
                                            std::size_t bits) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open payload file " + path);
  std::vector<char> bytes((std::istreambuf_iterator<char>(is)),
                          std::istreambuf_iterator<char>());
  const std::size_t needed = (bits + 7) / 8;
  if (bytes.size() != needed) {
    throw std::runtime_error("payload file holds " + std::to_string(bytes.size()) +
                             " bytes, expected exactly " + std::to_string(needed) +
                             " (" + std::to_string(bits) + " bits, zero padded)");
  }
  std::vector<std::uint8_t> out(bits);
  for (std::size_t i = 0; i < bits; ++i) {
    out[i] = static_cast<std::uint8_t>(bytes[i / 8] >> (7 - i % 8) & 1);
  }
  return out;
}

std::string pack_payload_bits(const std::vector<std::uint8_t>& bits) {
  std::string bytes((bits.size() + 7) / 8, '\0');
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) bytes[i / 8] |= static_cast<char>(1 << (7 - i % 8));
  }
  return bytes;
}

std::vector<double> linspace(double from, double to, std::size_t steps) {
  std::vector<double> values(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    values[i] = steps == 1
                    ? from
                    : from + (to - from) * static_cast<double>(i) /
                                 static_cast<double>(steps - 1);
  }
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"noisy shuffling channel toolkit"};
  app.fallthrough();
  GlobalOpts g;
  app.add_option("--seed", g.seed, "master seed for every stochastic command");
  app.add_option("--threads", g.threads, "worker threads (0 = library default)");
  app.add_option("--out", g.out, "output path (default stdout)");
  app.add_option("--format", g.format, "json|csv where a choice exists")
      ->check(CLI::IsMember({"default", "json", "csv"}));
  app.require_subcommand(1);

  // capacity
  double p = 0.0, beta = 2.0;
  std::optional<double> coverage;
  std::optional<unsigned> q_opt;
  auto* cap = app.add_subcommand("capacity", "closed-form capacity queries");
  cap->add_option("--p", p, "crossover probability")->required();
  cap->add_option("--beta", beta, "length scaling L = beta log2 M")->required();
  double cap_c = 0.0;
  auto* cap_c_opt = cap->add_option("--c", cap_c, "sampling coverage");
  unsigned cap_q = 0;
  auto* cap_q_opt = cap->add_option("--q", cap_q, "alphabet for the SDMC view");

  // region-grid
  double p_min = 1e-4, p_max = 0.25, beta_min = 0.5, beta_max = 10.0;
  std::size_t p_steps = 50, beta_steps = 50;
  auto* grid = app.add_subcommand("region-grid", "classify a (p, beta) grid");
  grid->add_option("--p-min", p_min);
  grid->add_option("--p-max", p_max);
  grid->add_option("--p-steps", p_steps);
  grid->add_option("--beta-min", beta_min);
  grid->add_option("--beta-max", beta_max);
  grid->add_option("--beta-steps", beta_steps);

  // shared codec options
  std::size_t m = 1024;
  double chan_p = 0.0;
  std::string inner_name = "identity";
  std::size_t redundancy = 0;
  std::string in_path;

  auto add_code_options = [&](CLI::App* cmd, bool with_p) {
    cmd->add_option("--m", m, "number of strings")->required();
    cmd->add_option("--beta", beta, "length scaling")->required();
    if (with_p) cmd->add_option("--p", chan_p, "crossover probability");
    cmd->add_option("--inner", inner_name,
                    "identity | repetitionK | hamming84 | tableNxK");
    cmd->add_option("--redundancy", redundancy, "outer parity strings r");
  };

  auto* enc = app.add_subcommand("encode",
                                 "payload file -> pool text on --out/stdout");
  add_code_options(enc, true);
  enc->add_option("--in", in_path, "payload bits, packed big-endian")->required();

  auto* dec = app.add_subcommand(
      "decode", "pool file -> payload on --out, report on stdout");
  add_code_options(dec, true);
  dec->add_option("--in", in_path, "pool text input")->required();

  // simulate
  std::size_t trials = 100;
  bool timing = false;
  auto* sim = app.add_subcommand("simulate", "Monte Carlo frame error rate");
  add_code_options(sim, true);
  double sim_c = 0.0;
  auto* sim_c_opt = sim->add_option("--c", sim_c, "sampling coverage");
  sim->add_option("--trials", trials);
  sim->add_flag("--timing", timing, "include wall_seconds in the report");

  // sweep
  std::string var_name = "p";
  double from = 0.0, to = 0.1;
  std::size_t steps = 5;
  auto* swp = app.add_subcommand("sweep", "simulate across p, beta, or r");
  add_code_options(swp, true);
  double swp_c = 0.0;
  auto* swp_c_opt = swp->add_option("--c", swp_c, "sampling coverage");
  swp->add_option("--var", var_name, "p | beta | r")->required();
  swp->add_option("--from", from)->required();
  swp->add_option("--to", to)->required();
  swp->add_option("--steps", steps)->required();
  swp->add_option("--trials", trials);

  // verify-bounds
  std::size_t tiny_m = 3, tiny_l = 4, codebooks = 200, codewords = 4;
  double alpha = 0.3;
  std::optional<double> delta_opt;
  double delta_val = 0.0;
  auto* vb = app.add_subcommand("verify-bounds",
                                "finite-M converse bounds on tiny instances");
  vb->add_option("--m", tiny_m)->required();
  vb->add_option("--l", tiny_l)->required();
  vb->add_option("--p", chan_p)->required();
  vb->add_option("--alpha", alpha)->required();
  auto* vb_delta = vb->add_option("--delta", delta_val, "defaults to alpha/2");
  vb->add_option("--codebooks", codebooks, "number of random instances");
  vb->add_option("--codewords", codewords, "codewords per instance");

  // oracle
  auto* orc = app.add_subcommand("oracle", "exact entropies of one instance");
  orc->add_option("--m", tiny_m)->required();
  orc->add_option("--l", tiny_l)->required();
  orc->add_option("--p", chan_p)->required();
  orc->add_option("--codewords", codewords);
  orc->add_option("--alpha", alpha);
  auto* orc_delta = orc->add_option("--delta", delta_val, "defaults to alpha/2");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    apply_threads(g);

    if (cap->parsed()) {
      if (*cap_c_opt) coverage = cap_c;
      if (*cap_q_opt) q_opt = cap_q;
      emit(g, nsc::capacity_report(p, beta, coverage, q_opt).dump(2) + "\n");
      return 0;
    }

    if (grid->parsed()) {
      auto rows = nsc::region_grid(p_min, p_max, p_steps, beta_min, beta_max,
                                   beta_steps);
      if (g.format == "json") {
        json arr = json::array();
        for (const auto& row : rows) {
          arr.push_back({{"p", row.p},
                         {"beta", row.beta},
                         {"region", nsc::region_name(row.label)},
                         {"margin", row.margin},
                         {"boundary_beta", row.boundary_beta}});
        }
        emit(g, json{{"schema_version", nsc::kSchemaVersion}, {"rows", arr}}.dump(2) +
                    "\n");
      } else {
        emit(g, nsc::region_grid_csv(rows));
      }
      return 0;
    }

    if (enc->parsed() || dec->parsed() || sim->parsed() || swp->parsed()) {
      nsc::CodeSpec spec{nsc::InnerCode::parse(inner_name), redundancy};
      std::optional<double> c;
      if (sim->parsed() && *sim_c_opt) c = sim_c;
      if (swp->parsed() && *swp_c_opt) c = swp_c;
      auto params = nsc::ChannelParams::make(m, beta, chan_p, 2, c);

      if (enc->parsed()) {
        const auto lay = spec.layout(params);
        auto payload = read_payload_bits(in_path, lay.net_payload_bits);
        nsc::Pool pool = nsc::encode(payload, spec, params);
        std::ostringstream os;
        nsc::save_pool(os, pool);
        emit(g, os.str());
        return 0;
      }
      if (dec->parsed()) {
        std::ifstream f(in_path);
        if (!f) throw std::runtime_error("cannot open pool file " + in_path);
        nsc::Pool pool = nsc::load_pool(f);
        auto report = nsc::decode(pool, spec, params);
        if (g.out.empty()) {
          throw std::runtime_error("decode needs --out for the payload bytes");
        }
        std::ofstream payload_file(g.out, std::ios::binary);
        if (!payload_file) throw std::runtime_error("cannot open " + g.out);
        payload_file << pack_payload_bits(report.payload);
        std::cout << nsc::decode_report_json(report).dump(2) << "\n";
        return 0;
      }
      if (sim->parsed()) {
        auto rep = nsc::simulate(params, spec, trials, g.seed);
        emit(g, nsc::sim_report_json(rep, timing).dump(2) + "\n");
        return 0;
      }
      // sweep
      auto values = linspace(from, to, steps);
      auto reports = nsc::sweep(nsc::parse_sweep_variable(var_name), values,
                                params, spec, trials, g.seed);
      if (g.format == "json") {
        json arr = json::array();
        for (const auto& rep : reports) arr.push_back(nsc::sim_report_json(rep));
        emit(g, json{{"schema_version", nsc::kSchemaVersion}, {"points", arr}}.dump(2) +
                    "\n");
      } else {
        emit(g, nsc::sweep_csv(reports));
      }
      return 0;
    }

    if (vb->parsed() || orc->parsed()) {
      if ((vb->parsed() && *vb_delta) || (orc->parsed() && *orc_delta)) {
        delta_opt = delta_val;
      }
      const double delta = delta_opt.value_or(alpha / 2.0);
      if (orc->parsed()) {
        nsc::Rng rng(g.seed);
        auto inst =
            nsc::random_tiny_instance(tiny_m, tiny_l, codewords, chan_p, rng);
        const bool preconds = alpha > 2 * chan_p && alpha <= 0.5 &&
                              delta > chan_p && delta <= alpha / 2.0 + 1e-12;
        auto rep = nsc::oracle_entropies(inst, alpha, delta);
        json out = nsc::bound_report_json(rep);
        out["preconditions_hold"] = preconds;
        out["seed"] = g.seed;
        emit(g, out.dump(2) + "\n");
        return preconds && !rep.bounds_hold ? 2 : 0;
      }
      // verify-bounds
      json instances = json::array();
      bool all_hold = true;
      double min_slack = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < codebooks; ++i) {
        nsc::Rng rng(nsc::derive_seed(g.seed, i));
        auto inst =
            nsc::random_tiny_instance(tiny_m, tiny_l, codewords, chan_p, rng);
        auto rep = nsc::check_bounds(inst, alpha, delta);
        all_hold = all_hold && rep.bounds_hold;
        for (double s : {rep.slack_b1, rep.slack_b1_jensen, rep.slack_b2,
                         rep.slack_b2_jensen}) {
          min_slack = std::min(min_slack, s);
        }
        json entry = nsc::bound_report_json(rep);
        entry["instance"] = i;
        instances.push_back(std::move(entry));
      }
      json out{{"schema_version", nsc::kSchemaVersion},
               {"m", tiny_m},
               {"l", tiny_l},
               {"p", chan_p},
               {"alpha", alpha},
               {"delta", delta},
               {"codebooks", codebooks},
               {"codewords", codewords},
               {"seed", g.seed},
               {"instances", instances},
               {"aggregate", {{"pass", all_hold}, {"min_slack", min_slack}}}};
      emit(g, out.dump(2) + "\n");
      return all_hold ? 0 : 2;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
