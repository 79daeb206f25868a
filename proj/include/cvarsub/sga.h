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

#ifndef CVARSUB_SGA_H_
#define CVARSUB_SGA_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cvarsub/element_set.h"
#include "cvarsub/greedy.h"
#include "cvarsub/matroid.h"
#include "cvarsub/objective.h"
#include "cvarsub/risk.h"

namespace cvarsub {

enum class ScenarioPolicy {
  // One scenario set per run, reused for every (S, tau) evaluation.
  kCommonRandomNumbers,
  // A separately seeded scenario set for each tau on the grid.
  kFreshPerTau,
};

std::string to_string(ScenarioPolicy policy);
// Accepts "crn", "common_random_numbers", "fresh", "fresh_per_tau".
ScenarioPolicy parse_scenario_policy(std::string_view text);

// Environment variable read for the default worker count.
inline constexpr const char* kWorkersEnv = "CVARSUB_WORKERS";
// Value of CVARSUB_WORKERS when set to a positive integer, otherwise the
// hardware concurrency (at least 1).
int default_worker_count();

struct SgaConfig {
  RiskLevel alpha{1.0};
  // Upper end of the tau search range. Unset means the objective's hint.
  std::optional<double> gamma;
  // Grid separation; must satisfy 0 < delta <= gamma.
  double delta = 1.0;
  int samples = 1000;
  std::uint64_t seed = 0;
  ScenarioPolicy policy = ScenarioPolicy::kCommonRandomNumbers;
  // 0 picks default_worker_count(). Results never depend on this.
  int workers = 0;
};

// ceil(gamma / delta), ignoring a quotient that overshoots an integer by
// rounding noise only.
int grid_steps(double gamma, double delta);
// tau_i = i * delta for i = 0..grid_steps; the last point may exceed gamma
// when delta does not divide it.
std::vector<double> tau_grid(double gamma, double delta);

struct SweepEntry {
  double tau = 0.0;
  ElementSet set;
  double h = 0.0;
  // Objective evaluations spent at this tau: H calls times n_s.
  std::int64_t evaluations = 0;
};

struct SgaResult {
  ElementSet chosen_set;
  double chosen_tau = 0.0;
  double h_value = 0.0;
  int chosen_index = 0;
  double gamma = 0.0;
  std::vector<SweepEntry> sweep;
  std::int64_t oracle_evaluations = 0;
};

// The sequential greedy algorithm: for each tau on the grid run
// greedy_maximize on H(., tau) and return the sweep entry with the largest
// H, earliest tau on ties. Throws InputError for gamma <= 0 or delta outside
// (0, gamma].
SgaResult run_sga(const StochasticObjective& obj, const Matroid& m,
                  const SgaConfig& cfg);
// Same, with the common-random-numbers scenario set supplied by the caller.
// cfg.samples, cfg.seed and cfg.policy are ignored.
SgaResult run_sga(const StochasticObjective& obj, const Matroid& m,
                  const SgaConfig& cfg, const ScenarioSet& scenarios);

// Resolved gamma for a config (its own or the objective's hint).
double resolve_gamma(const StochasticObjective& obj, const SgaConfig& cfg);

// Additive error term k/(1+k) * gamma * (1/alpha - 1).
double additive_error(double curvature, RiskLevel alpha, double gamma);

struct BoundReport {
  double curvature = 0.0;
  double multiplicative = 1.0;  // 1 / (1 + k)
  double delta_term = 0.0;      // delta / (1 + k)
  double additive = 0.0;        // k / (1 + k) * gamma * (1/alpha - 1)
  double h_star = 0.0;
  // (h_star - delta) / (1 + k) - additive.
  double certified_lower_bound = 0.0;
};

// Lower bound certified for the SGA value given the optimum h_star over the
// grid. Throws InputError for a curvature outside [0, 1].
BoundReport guarantee_bound(double curvature, RiskLevel alpha, double gamma,
                            double delta, double h_star);
// cfg.gamma must be set.
BoundReport guarantee_bound(const Curvature& k, const SgaConfig& cfg,
                            double h_star);

struct BruteForceResult {
  // Exact maximum of H over feasible sets x tau grid.
  ElementSet set;
  double tau = 0.0;
  double h_star = 0.0;
  // Best H at each grid point, in grid order.
  std::vector<double> per_tau_best;
  std::vector<ElementSet> per_tau_set;
  // Maximum over feasible sets of the empirical CVaR, i.e. of H with tau
  // unrestricted.
  ElementSet grid_free_set;
  double grid_free_tau = 0.0;
  double grid_free_opt = 0.0;
};

// Exhaustive verification oracle. Throws CapExceededError above `cap`.
BruteForceResult brute_force_opt(const StochasticObjective& obj,
                                 const Matroid& m, const ScenarioSet& scenarios,
                                 RiskLevel alpha, std::span<const double> taus,
                                 int cap = kDefaultEnumerationCap);

// Curvature of g_tau(S) = H(S, tau) - H(empty, tau) in S, maximized over
// the tau grid. Null elements of g_tau are skipped, and a tau at which g_tau
// vanishes contributes 0.
Curvature auxiliary_curvature(const StochasticObjective& obj, const Matroid& m,
                              const ScenarioSet& scenarios, RiskLevel alpha,
                              std::span<const double> taus,
                              CurvatureMethod method,
                              int cap = kDefaultEnumerationCap);

// Total curvature of the sample-mean utility F(S) = mean_y f(S, y). It does
// not depend on alpha; null elements are skipped.
Curvature mean_utility_curvature(const StochasticObjective& obj,
                                 const ScenarioSet& scenarios);

struct VerificationReport {
  BruteForceResult brute_force;
  Curvature curvature;
  BoundReport bound;
  double sga_h = 0.0;
  // sga_h - certified_lower_bound; the guarantee holds when >= -tolerance.
  double slack = 0.0;
  bool bound_holds = false;
  // grid_free_opt - h_star; at most delta when the grid covers the optimum.
  double grid_gap = 0.0;
  bool grid_gap_holds = false;
};

// Checks an SGA result computed on `scenarios` against the exhaustive
// optimum and the curvature-dependent guarantee. cfg.gamma must be set.
VerificationReport verify_sga(
    const StochasticObjective& obj, const Matroid& m, const SgaConfig& cfg,
    const SgaResult& result, const ScenarioSet& scenarios,
    CurvatureMethod method = CurvatureMethod::kExactMatroidEnumeration,
    double tolerance = 1e-9);

struct UtilityStats {
  double mean = 0.0;
  double stddev = 0.0;  // population (1/n) standard deviation
  double min = 0.0;
  double max = 0.0;
};

UtilityStats utility_stats(std::span<const double> values);

struct AlphaSweepOptions {
  // Fresh scenarios used to score each chosen set; 0 means cfg.samples.
  int evaluation_samples = 0;
  int histogram_bins = 20;
  // Curvature fed into the additive-error column; unset means
  // mean_utility_curvature on the shared scenario set.
  std::optional<double> curvature;
};

struct AlphaSweepRow {
  double alpha = 1.0;
  SgaResult result;
  std::vector<double> evaluation_utilities;
  UtilityStats stats;
  std::vector<int> histogram;
  double additive_error = 0.0;
};

struct AlphaSweep {
  std::vector<AlphaSweepRow> rows;
  double curvature = 0.0;
  // histogram_bins + 1 edges shared by every row.
  std::vector<double> bin_edges;
};

// run_sga at each alpha under common random numbers (one shared scenario
// set), then scores each chosen set on an independent evaluation sample.
// Throws InputError on an empty list.
AlphaSweep alpha_sweep(const StochasticObjective& obj, const Matroid& m,
                       const SgaConfig& cfg, std::span<const double> alphas,
                       const AlphaSweepOptions& options = {});

}  // namespace cvarsub

#endif  // CVARSUB_SGA_H_
