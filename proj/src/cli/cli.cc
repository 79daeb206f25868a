// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cvarsub/cli.h"

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cvarsub/errors.h"
#include "cvarsub/instance_io.h"
#include "cvarsub/manifest.h"
#include "cvarsub/risk.h"
#include "cvarsub/sga.h"
#include "json.hpp"

namespace cvarsub::cli {

namespace {

using nlohmann::json;

constexpr const char* kFooter =
    R"(Output files embed their run manifest: a "manifest" key in JSON,
leading '#' lines in CSV.
  run --out P     P.json        config, chosen pair, sweep table, counters
                  P_tau.csv     tau,h,set,evaluations
  sweep --out P   P.json        per-alpha results and the curvature used
                  P_alpha.csv   alpha,h_value,tau,set,utility_mean,utility_std,
                                utility_min,utility_max,additive_error,
                                oracle_evaluations
                  P_tau.csv     alpha,tau,h,set
                  P_hist.csv    alpha,bin_lo,bin_hi,count
Sets are written as space-separated element ids.
Environment: CVARSUB_WORKERS sets the default worker count.)";

std::string fmt(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

std::string set_text(const ElementSet& s) {
  std::string out;
  for (int id : s) {
    if (!out.empty()) out += ' ';
    out += std::to_string(id);
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
  if (!out) throw InputError("failed writing " + path);
}

std::string join_args(int argc, char** argv) {
  std::string out;
  for (int i = 0; i < argc; ++i) {
    if (i > 0) out += ' ';
    out += argv[i];
  }
  return out;
}

struct RunOptions {
  std::string instance;
  double alpha = 0.1;
  double gamma = 0.0;
  CLI::Option* gamma_opt = nullptr;
  double delta = 1.0;
  int samples = 1000;
  std::uint64_t seed = 0;
  CLI::Option* seed_opt = nullptr;
  std::string policy = "crn";
  bool verify = false;
  std::string curvature = "matroid";
  std::string out;
  int workers = 0;
  // sweep only
  std::string alphas = "0.01,0.1,0.3,0.6,1.0";
  int bins = 20;
  int eval_samples = 0;
  double curvature_value = -1.0;
};

void add_run_options(CLI::App* cmd, RunOptions& o, bool with_alpha) {
  cmd->add_option("instance", o.instance, "instance JSON file")
      ->required()
      ->check(CLI::ExistingFile);
  if (with_alpha) {
    cmd->add_option("--alpha", o.alpha, "risk level in (0, 1]")
        ->capture_default_str();
  }
  o.gamma_opt =
      cmd->add_option("--gamma", o.gamma,
                      "upper end of the tau range (default: instance hint)");
  cmd->add_option("--delta", o.delta, "tau grid separation")
      ->capture_default_str();
  cmd->add_option("--samples", o.samples, "scenarios n_s")
      ->capture_default_str();
  o.seed_opt = cmd->add_option("--seed", o.seed,
                               "scenario seed (default: the instance seed)");
  cmd->add_option("--scenario-policy", o.policy,
                  "crn (common random numbers) or fresh (per tau)")
      ->capture_default_str();
  cmd->add_option("--workers", o.workers,
                  "worker threads (default: $CVARSUB_WORKERS or all cores)");
}

SgaConfig make_config(const RunOptions& o, const Instance& inst) {
  SgaConfig cfg;
  cfg.alpha = RiskLevel(o.alpha);
  cfg.gamma = o.gamma_opt->count() > 0 ? o.gamma : inst.objective->gamma_hint();
  cfg.delta = o.delta;
  cfg.samples = o.samples;
  cfg.seed = o.seed_opt->count() > 0 ? o.seed : inst.seed;
  cfg.policy = parse_scenario_policy(o.policy);
  cfg.workers = o.workers;
  return cfg;
}

json config_json(const SgaConfig& cfg) {
  return json{{"alpha", cfg.alpha.value()},
              {"gamma", *cfg.gamma},
              {"delta", cfg.delta},
              {"samples", cfg.samples},
              {"seed", cfg.seed},
              {"scenario_policy", to_string(cfg.policy)},
              {"grid_points", grid_steps(*cfg.gamma, cfg.delta) + 1},
              {"risk_label",
               cfg.alpha.risk_neutral() ? "risk-neutral" : "risk-averse"}};
}

json instance_summary(const Instance& inst) {
  return json{{"problem", inst.problem},
              {"seed", inst.seed},
              {"ground_size", inst.matroid.ground_size()},
              {"matroid", matroid_to_json(inst.matroid)},
              {"gamma_hint", inst.objective->gamma_hint()}};
}

json set_json(const ElementSet& s, const Instance& inst) {
  std::vector<std::string> labels;
  for (int id : s) labels.push_back(inst.ground.label(id));
  return json{{"ids", s.ids()}, {"labels", labels}};
}

json result_json(const SgaResult& r, const Instance& inst) {
  json sweep = json::array();
  for (const SweepEntry& e : r.sweep) {
    sweep.push_back(json{{"tau", e.tau},
                         {"set", e.set.ids()},
                         {"h", e.h},
                         {"evaluations", e.evaluations}});
  }
  return json{{"chosen_set", set_json(r.chosen_set, inst)},
              {"chosen_tau", r.chosen_tau},
              {"chosen_index", r.chosen_index},
              {"h_value", r.h_value},
              {"oracle_evaluations", r.oracle_evaluations},
              {"sweep", sweep}};
}

json verification_json(const VerificationReport& v, const Instance& inst) {
  const BoundReport& b = v.bound;
  return json{{"brute_force",
               {{"set", set_json(v.brute_force.set, inst)},
                {"tau", v.brute_force.tau},
                {"h_star", v.brute_force.h_star},
                {"grid_free_set", set_json(v.brute_force.grid_free_set, inst)},
                {"grid_free_tau", v.brute_force.grid_free_tau},
                {"grid_free_opt", v.brute_force.grid_free_opt}}},
              {"curvature",
               {{"value", v.curvature.value},
                {"method", to_string(v.curvature.method)}}},
              {"bound",
               {{"multiplicative", b.multiplicative},
                {"delta_term", b.delta_term},
                {"additive", b.additive},
                {"certified_lower_bound", b.certified_lower_bound}}},
              {"sga_h", v.sga_h},
              {"slack", v.slack},
              {"bound_holds", v.bound_holds},
              {"grid_gap", v.grid_gap},
              {"grid_gap_holds", v.grid_gap_holds}};
}

std::string with_manifest(json data, const RunManifest& m) {
  data["manifest"] = manifest_to_json(m);
  return data.dump(2) + "\n";
}

// Throws CLI::ValidationError (a usage error) on an empty or malformed list.
std::vector<double> parse_alphas(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string::npos) end = text.size();
    std::string item = text.substr(start, end - start);
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) {
      double v = 0.0;
      auto [ptr, ec] =
          std::from_chars(item.data(), item.data() + item.size(), v);
      if (ec != std::errc() || ptr != item.data() + item.size()) {
        throw CLI::ValidationError("--alphas", "not a number: " + item);
      }
      out.push_back(v);
    }
    start = end + 1;
  }
  if (out.empty()) throw CLI::ValidationError("--alphas", "empty list");
  return out;
}

CurvatureMethod parse_curvature(const std::string& text) {
  if (text == "matroid") return CurvatureMethod::kExactMatroidEnumeration;
  if (text == "total") return CurvatureMethod::kTotalOverGroundSet;
  throw InputError("curvature must be 'matroid' or 'total'");
}

int cmd_gen_vehicle(const VehicleAssignmentParams& p, const std::string& out,
                    const std::string& command_line) {
  Instance inst = make_vehicle_instance(p);
  json j = instance_to_json(inst);
  RunManifest m = make_manifest(command_line, j.dump(), inst.seed);
  std::ostream& summary = out.empty() ? std::cerr : std::cout;
  if (out.empty()) {
    std::cout << with_manifest(j, m);
  } else {
    write_file(out, with_manifest(j, m));
  }
  summary << "vehicle instance: " << p.vehicles << " vehicles, " << p.demands
          << " demands, " << inst.matroid.ground_size() << " pairs, "
          << inst.matroid.describe() << ", gamma hint "
          << fmt(inst.objective->gamma_hint()) << "\n";
  return kExitOk;
}

struct SensorGenOptions {
  SensorCoverageParams params;
  std::string grid_path;
  int rows = 20;
  int cols = 20;
  int buildings = 6;
};

int cmd_gen_sensor(const SensorGenOptions& o, const std::string& out,
                   const std::string& command_line) {
  OccupancyGrid grid = [&] {
    if (o.grid_path.empty()) {
      return OccupancyGrid::RandomCampus(o.rows, o.cols, o.buildings,
                                         o.params.seed);
    }
    std::ifstream in(o.grid_path);
    if (!in) throw InputError("cannot open grid file " + o.grid_path);
    std::stringstream text;
    text << in.rdbuf();
    return OccupancyGrid::Parse(text.str());
  }();
  Instance inst = make_sensor_instance(grid, o.params);
  json j = instance_to_json(inst);
  j["sensor"]["grid"] = grid.to_rows();
  RunManifest m = make_manifest(command_line, j.dump(), inst.seed);
  std::ostream& summary = out.empty() ? std::cerr : std::cout;
  if (out.empty()) {
    std::cout << with_manifest(j, m);
  } else {
    write_file(out, with_manifest(j, m));
  }
  summary << "sensor instance: " << o.params.candidates << " candidates, "
          << grid.free_count() << " free cells, " << inst.matroid.describe()
          << ", gamma hint " << fmt(inst.objective->gamma_hint()) << "\n";
  return kExitOk;
}

int cmd_run(const RunOptions& o, const std::string& command_line,
            bool verify_only) {
  const Instance inst = load_instance(o.instance);
  const SgaConfig cfg = make_config(o, inst);
  const bool verify = o.verify || verify_only;
  if (verify && cfg.policy != ScenarioPolicy::kCommonRandomNumbers) {
    throw InputError(
        "verification needs --scenario-policy crn (one shared scenario set)");
  }

  json data{{"command", verify_only ? "verify" : "run"},
            {"config", config_json(cfg)},
            {"instance", instance_summary(inst)}};
  SgaResult result;
  std::optional<ScenarioSet> shared;
  if (cfg.policy == ScenarioPolicy::kCommonRandomNumbers) {
    shared = sample_scenarios(*inst.objective, cfg.samples, cfg.seed);
    result = run_sga(*inst.objective, inst.matroid, cfg, *shared);
    const CvarOfSet c =
        cvar_of_set(*inst.objective, result.chosen_set, *shared, cfg.alpha);
    data["chosen_cvar"] = {{"cvar", c.cvar}, {"var", c.tau_star}};
  } else {
    result = run_sga(*inst.objective, inst.matroid, cfg);
  }
  data["result"] = result_json(result, inst);

  int exit_code = kExitOk;
  if (verify) {
    const VerificationReport v =
        verify_sga(*inst.objective, inst.matroid, cfg, result, *shared,
                   parse_curvature(o.curvature));
    data["verify"] = verification_json(v, inst);
    if (!v.bound_holds) exit_code = kExitVerificationFailed;
    std::cerr << "verify: H(S^G, tau^G) = " << fmt(v.sga_h)
              << ", certified lower bound = "
              << fmt(v.bound.certified_lower_bound)
              << (v.bound_holds ? " [holds]" : " [VIOLATED]") << "\n";
  }

  json canonical = data;
  canonical["instance_document"] = instance_to_json(inst);
  const RunManifest m =
      make_manifest(command_line,
                    json{{"config", data["config"]},
                         {"instance", canonical["instance_document"]},
                         {"verify", verify},
                         {"curvature", o.curvature}}
                        .dump(),
                    inst.seed);

  if (o.out.empty()) {
    std::cout << with_manifest(data, m);
    return exit_code;
  }
  write_file(o.out + ".json", with_manifest(data, m));
  std::string csv = manifest_comment_block(m) + "tau,h,set,evaluations\n";
  for (const SweepEntry& e : result.sweep) {
    csv += fmt(e.tau) + "," + fmt(e.h) + "," + set_text(e.set) + "," +
           std::to_string(e.evaluations) + "\n";
  }
  write_file(o.out + "_tau.csv", csv);
  std::cout << "S^G = " << set_text(result.chosen_set)
            << ", tau^G = " << fmt(result.chosen_tau)
            << ", H = " << fmt(result.h_value) << "\n";
  return exit_code;
}

int cmd_sweep(const RunOptions& o, const std::string& command_line) {
  const std::vector<double> alphas = parse_alphas(o.alphas);
  if (o.out.empty()) throw CLI::ValidationError("--out", "required");
  const Instance inst = load_instance(o.instance);
  RunOptions first = o;
  first.alpha = alphas.front();
  SgaConfig cfg = make_config(first, inst);
  cfg.policy = ScenarioPolicy::kCommonRandomNumbers;
  AlphaSweepOptions opts;
  opts.evaluation_samples = o.eval_samples;
  opts.histogram_bins = o.bins;
  if (o.curvature_value >= 0.0) opts.curvature = o.curvature_value;
  const AlphaSweep sw =
      alpha_sweep(*inst.objective, inst.matroid, cfg, alphas, opts);

  json config = config_json(cfg);
  config.erase("alpha");
  config.erase("risk_label");
  config["alphas"] = alphas;
  config["histogram_bins"] = o.bins;
  config["evaluation_samples"] =
      o.eval_samples > 0 ? o.eval_samples : cfg.samples;
  json rows = json::array();
  for (const AlphaSweepRow& row : sw.rows) {
    rows.push_back(
        json{{"alpha", row.alpha},
             {"risk_label", row.alpha == 1.0 ? "risk-neutral" : "risk-averse"},
             {"result", result_json(row.result, inst)},
             {"utility",
              {{"mean", row.stats.mean},
               {"std", row.stats.stddev},
               {"min", row.stats.min},
               {"max", row.stats.max},
               {"histogram", row.histogram}}},
             {"additive_error", row.additive_error}});
  }
  json data{{"command", "sweep"},
            {"config", config},
            {"instance", instance_summary(inst)},
            {"curvature", sw.curvature},
            {"bin_edges", sw.bin_edges},
            {"rows", rows}};
  const RunManifest m =
      make_manifest(command_line,
                    json{{"config", config},
                         {"instance", instance_to_json(inst)},
                         {"curvature_override", o.curvature_value}}
                        .dump(),
                    inst.seed);

  write_file(o.out + ".json", with_manifest(data, m));
  const std::string header = manifest_comment_block(m);
  std::string alpha_csv =
      header +
      "alpha,h_value,tau,set,utility_mean,utility_std,utility_min,"
      "utility_max,additive_error,oracle_evaluations\n";
  std::string tau_csv = header + "alpha,tau,h,set\n";
  std::string hist_csv = header + "alpha,bin_lo,bin_hi,count\n";
  for (const AlphaSweepRow& row : sw.rows) {
    const SgaResult& r = row.result;
    alpha_csv += fmt(row.alpha) + "," + fmt(r.h_value) + "," +
                 fmt(r.chosen_tau) + "," + set_text(r.chosen_set) + "," +
                 fmt(row.stats.mean) + "," + fmt(row.stats.stddev) + "," +
                 fmt(row.stats.min) + "," + fmt(row.stats.max) + "," +
                 fmt(row.additive_error) + "," +
                 std::to_string(r.oracle_evaluations) + "\n";
    for (const SweepEntry& e : r.sweep) {
      tau_csv += fmt(row.alpha) + "," + fmt(e.tau) + "," + fmt(e.h) + "," +
                 set_text(e.set) + "\n";
    }
    for (std::size_t b = 0; b < row.histogram.size(); ++b) {
      hist_csv += fmt(row.alpha) + "," + fmt(sw.bin_edges[b]) + "," +
                  fmt(sw.bin_edges[b + 1]) + "," +
                  std::to_string(row.histogram[b]) + "\n";
    }
  }
  write_file(o.out + "_alpha.csv", alpha_csv);
  write_file(o.out + "_tau.csv", tau_csv);
  write_file(o.out + "_hist.csv", hist_csv);
  for (const AlphaSweepRow& row : sw.rows) {
    std::cout << "alpha " << fmt(row.alpha)
              << ": H = " << fmt(row.result.h_value)
              << ", tau = " << fmt(row.result.chosen_tau) << ", mean "
              << fmt(row.stats.mean) << ", std " << fmt(row.stats.stddev)
              << "\n";
  }
  return kExitOk;
}

}  // namespace

int Main(int argc, char** argv) {
  const std::string command_line = join_args(argc, argv);
  CLI::App app{
      "Risk-averse (CVaR) submodular set selection under matroid "
      "constraints with the sequential greedy algorithm."};
  app.name("cvarsub");
  app.footer(kFooter);
  app.require_subcommand(1);

  CLI::App* gen = app.add_subcommand("gen", "generate a problem instance");
  gen->require_subcommand(1);
  std::string gen_out;

  VehicleAssignmentParams vp;
  CLI::App* gen_vehicle =
      gen->add_subcommand("vehicle", "random vehicle-to-demand assignment");
  gen_vehicle->add_option("--r", vp.vehicles, "number of vehicles R")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  gen_vehicle->add_option("--n", vp.demands, "number of demands N")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  gen_vehicle->add_option("--side", vp.side, "side of the square")
      ->capture_default_str();
  gen_vehicle->add_option("--seed", vp.seed, "instance seed")
      ->capture_default_str();
  gen_vehicle->add_option("--out", gen_out, "output file (default stdout)");

  SensorGenOptions so;
  CLI::App* gen_sensor =
      gen->add_subcommand("sensor", "sensor selection with failures");
  gen_sensor->add_option("--n", so.params.candidates, "candidate positions N")
      ->capture_default_str();
  gen_sensor->add_option("--m", so.params.select, "sensors to place M")
      ->capture_default_str();
  gen_sensor
      ->add_option("--grid", so.grid_path,
                   "occupancy grid file: rows of 0/1 ('#' = obstacle)")
      ->check(CLI::ExistingFile);
  gen_sensor->add_option("--rows", so.rows, "random grid rows (no --grid)")
      ->capture_default_str();
  gen_sensor->add_option("--cols", so.cols, "random grid cols (no --grid)")
      ->capture_default_str();
  gen_sensor
      ->add_option("--buildings", so.buildings,
                   "random grid obstacles (no --grid)")
      ->capture_default_str();
  gen_sensor->add_option("--seed", so.params.seed, "instance seed")
      ->capture_default_str();
  gen_sensor->add_option("--out", gen_out, "output file (default stdout)");

  RunOptions run_opts;
  CLI::App* run = app.add_subcommand("run", "run SGA on an instance");
  add_run_options(run, run_opts, true);
  run->add_flag("--verify", run_opts.verify,
                "append the brute-force optimum and the guarantee check "
                "(small instances only); exit 1 if the guarantee fails");
  run->add_option("--curvature", run_opts.curvature,
                  "curvature used by --verify: matroid or total")
      ->capture_default_str();
  run->add_option("--out", run_opts.out,
                  "output prefix (writes P.json, P_tau.csv; default stdout)");

  RunOptions verify_opts;
  CLI::App* verify = app.add_subcommand(
      "verify", "run SGA and check it against exhaustive search");
  add_run_options(verify, verify_opts, true);
  verify
      ->add_option("--curvature", verify_opts.curvature,
                   "matroid (exact) or total")
      ->capture_default_str();
  verify->add_option("--out", verify_opts.out, "output prefix");

  RunOptions sweep_opts;
  CLI::App* sweep = app.add_subcommand("sweep", "run SGA over risk levels");
  add_run_options(sweep, sweep_opts, false);
  sweep
      ->add_option("--alphas", sweep_opts.alphas, "comma-separated risk levels")
      ->capture_default_str();
  sweep->add_option("--bins", sweep_opts.bins, "histogram bins")
      ->capture_default_str();
  sweep->add_option("--eval-samples", sweep_opts.eval_samples,
                    "fresh scenarios for utility histograms (default n_s)");
  sweep->add_option("--curvature-value", sweep_opts.curvature_value,
                    "fix k_f for the additive-error column");
  sweep->add_option("--out", sweep_opts.out, "output prefix")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen_vehicle->parsed()) {
      return cmd_gen_vehicle(vp, gen_out, command_line);
    }
    if (gen_sensor->parsed()) return cmd_gen_sensor(so, gen_out, command_line);
    if (run->parsed()) return cmd_run(run_opts, command_line, false);
    if (verify->parsed()) return cmd_run(verify_opts, command_line, true);
    if (sweep->parsed()) return cmd_sweep(sweep_opts, command_line);
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cvarsub::cli
