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

#include "cvarsub/sga.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <limits>
#include <map>
#include <thread>
#include <utility>

#include "cvarsub/errors.h"
#include "cvarsub/rng.h"

namespace cvarsub {

std::string to_string(ScenarioPolicy policy) {
  switch (policy) {
    case ScenarioPolicy::kCommonRandomNumbers:
      return "common_random_numbers";
    case ScenarioPolicy::kFreshPerTau:
      return "fresh_per_tau";
  }
  return "unknown";
}

ScenarioPolicy parse_scenario_policy(std::string_view text) {
  if (text == "crn" || text == "common_random_numbers") {
    return ScenarioPolicy::kCommonRandomNumbers;
  }
  if (text == "fresh" || text == "fresh_per_tau") {
    return ScenarioPolicy::kFreshPerTau;
  }
  throw InputError("unknown scenario policy '" + std::string(text) + "'");
}

int default_worker_count() {
  if (const char* env = std::getenv(kWorkersEnv)) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 4096) {
      return static_cast<int>(v);
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int grid_steps(double gamma, double delta) {
  const double q = gamma / delta;
  const double steps = std::ceil(q - 1e-9 * std::max(1.0, q));
  if (!(steps < 1e8)) throw InputError("tau grid would exceed 1e8 points");
  return std::max(0, static_cast<int>(steps));
}

std::vector<double> tau_grid(double gamma, double delta) {
  const int steps = grid_steps(gamma, delta);
  std::vector<double> taus(steps + 1);
  for (int i = 0; i <= steps; ++i) taus[i] = i * delta;
  return taus;
}

double resolve_gamma(const StochasticObjective& obj, const SgaConfig& cfg) {
  return cfg.gamma.value_or(obj.gamma_hint());
}

namespace {

void validate(const StochasticObjective& obj, const Matroid& m,
              const SgaConfig& cfg, double gamma) {
  if (m.ground_size() != obj.ground_size()) {
    throw InputError("matroid and objective disagree on the ground size");
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma)) {
    throw InputError("gamma must be a positive finite number");
  }
  if (!(cfg.delta > 0.0 && cfg.delta <= gamma)) {
    throw InputError("delta must lie in (0, gamma]");
  }
  if (cfg.samples < 1) throw InputError("n_s must be >= 1");
}

// Runs body(i) for i in [0, n) on up to `workers` threads. The first
// exception by index is rethrown after all threads finish.
void parallel_for(int n, int workers, const std::function<void(int)>& body) {
  if (workers <= 0) workers = default_worker_count();
  workers = std::min(workers, n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  std::atomic<int> next{0};
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int i = next++; i < n; i = next++) {
          try {
            body(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

SweepEntry solve_at(const StochasticObjective& obj, const Matroid& m,
                    RiskLevel alpha, double tau, const ScenarioSet& scenarios) {
  const SetFunction h = [&](const ElementSet& s) {
    return auxiliary_h(obj, s, tau, scenarios, alpha);
  };
  GreedyResult g = greedy_maximize(h, m);
  return SweepEntry{tau, std::move(g.set), g.value,
                    g.trace.evaluations * scenarios.size()};
}

SgaResult pick_best(std::vector<SweepEntry> sweep, double gamma) {
  SgaResult out;
  out.gamma = gamma;
  for (int i = 0; i < static_cast<int>(sweep.size()); ++i) {
    out.oracle_evaluations += sweep[i].evaluations;
    if (i == 0 || sweep[i].h > sweep[out.chosen_index].h) {
      out.chosen_index = i;
    }
  }
  out.chosen_set = sweep[out.chosen_index].set;
  out.chosen_tau = sweep[out.chosen_index].tau;
  out.h_value = sweep[out.chosen_index].h;
  out.sweep = std::move(sweep);
  return out;
}

}  // namespace

SgaResult run_sga(const StochasticObjective& obj, const Matroid& m,
                  const SgaConfig& cfg, const ScenarioSet& scenarios) {
  const double gamma = resolve_gamma(obj, cfg);
  validate(obj, m, cfg, gamma);
  const std::vector<double> taus = tau_grid(gamma, cfg.delta);
  std::vector<SweepEntry> sweep(taus.size());
  parallel_for(static_cast<int>(taus.size()), cfg.workers, [&](int i) {
    sweep[i] = solve_at(obj, m, cfg.alpha, taus[i], scenarios);
  });
  return pick_best(std::move(sweep), gamma);
}

SgaResult run_sga(const StochasticObjective& obj, const Matroid& m,
                  const SgaConfig& cfg) {
  const double gamma = resolve_gamma(obj, cfg);
  validate(obj, m, cfg, gamma);
  if (cfg.policy == ScenarioPolicy::kCommonRandomNumbers) {
    return run_sga(obj, m, cfg, sample_scenarios(obj, cfg.samples, cfg.seed));
  }
  const std::vector<double> taus = tau_grid(gamma, cfg.delta);
  std::vector<SweepEntry> sweep(taus.size());
  parallel_for(static_cast<int>(taus.size()), cfg.workers, [&](int i) {
    const std::uint64_t seed = mix_seed(
        cfg.seed, static_cast<std::uint64_t>(Stream::kFreshTau) << 32 | i);
    sweep[i] = solve_at(obj, m, cfg.alpha, taus[i],
                        sample_scenarios(obj, cfg.samples, seed));
  });
  return pick_best(std::move(sweep), gamma);
}

double additive_error(double curvature, RiskLevel alpha, double gamma) {
  return curvature / (1.0 + curvature) * gamma * (1.0 / alpha.value() - 1.0);
}

BoundReport guarantee_bound(double curvature, RiskLevel alpha, double gamma,
                            double delta, double h_star) {
  if (!(curvature >= 0.0 && curvature <= 1.0)) {
    throw InputError("curvature must lie in [0, 1]");
  }
  BoundReport r;
  r.curvature = curvature;
  r.multiplicative = 1.0 / (1.0 + curvature);
  r.delta_term = delta / (1.0 + curvature);
  r.additive = additive_error(curvature, alpha, gamma);
  r.h_star = h_star;
  r.certified_lower_bound =
      r.multiplicative * h_star - r.delta_term - r.additive;
  return r;
}

BoundReport guarantee_bound(const Curvature& k, const SgaConfig& cfg,
                            double h_star) {
  if (!cfg.gamma) throw InputError("guarantee_bound needs a resolved gamma");
  return guarantee_bound(k.value, cfg.alpha, *cfg.gamma, cfg.delta, h_star);
}

BruteForceResult brute_force_opt(const StochasticObjective& obj,
                                 const Matroid& m, const ScenarioSet& scenarios,
                                 RiskLevel alpha, std::span<const double> taus,
                                 int cap) {
  if (taus.empty()) throw InputError("brute_force_opt needs a tau grid");
  const std::vector<ElementSet> feasible = enumerate_feasible(m, cap);
  BruteForceResult out;
  out.per_tau_best.assign(taus.size(),
                          -std::numeric_limits<double>::infinity());
  out.per_tau_set.resize(taus.size());
  out.h_star = -std::numeric_limits<double>::infinity();
  out.grid_free_opt = -std::numeric_limits<double>::infinity();
  for (const ElementSet& s : feasible) {
    const std::vector<double> u = utility_sample(obj, s, scenarios).values;
    for (std::size_t i = 0; i < taus.size(); ++i) {
      const double h = auxiliary_h(u, taus[i], alpha);
      if (h > out.per_tau_best[i]) {
        out.per_tau_best[i] = h;
        out.per_tau_set[i] = s;
      }
      if (h > out.h_star) {
        out.h_star = h;
        out.set = s;
        out.tau = taus[i];
      }
    }
    const CvarOfSet c = cvar_of_set(u, alpha);
    if (c.cvar > out.grid_free_opt) {
      out.grid_free_opt = c.cvar;
      out.grid_free_set = s;
      out.grid_free_tau = c.tau_star;
    }
  }
  return out;
}

Curvature auxiliary_curvature(const StochasticObjective& obj, const Matroid& m,
                              const ScenarioSet& scenarios, RiskLevel alpha,
                              std::span<const double> taus,
                              CurvatureMethod method, int cap) {
  std::map<ElementSet, std::vector<double>> memo;
  auto utilities = [&](const ElementSet& s) -> const std::vector<double>& {
    auto it = memo.find(s);
    if (it == memo.end()) {
      it = memo.emplace(s, utility_sample(obj, s, scenarios).values).first;
    }
    return it->second;
  };
  CurvatureOptions options;
  options.skip_null_elements = true;
  Curvature worst{0.0, method};
  for (double tau : taus) {
    const double base = auxiliary_h(utilities(ElementSet{}), tau, alpha);
    const SetFunction g = [&](const ElementSet& s) {
      return auxiliary_h(utilities(s), tau, alpha) - base;
    };
    const Curvature k = method == CurvatureMethod::kExactMatroidEnumeration
                            ? matroid_curvature(g, m, cap, options)
                            : total_curvature(g, obj.ground_size(), options);
    worst.value = std::max(worst.value, k.value);
  }
  return worst;
}

Curvature mean_utility_curvature(const StochasticObjective& obj,
                                 const ScenarioSet& scenarios) {
  const SetFunction mean = [&](const ElementSet& s) {
    const std::vector<double> u = utility_sample(obj, s, scenarios).values;
    return pairwise_sum(u) / static_cast<double>(u.size());
  };
  CurvatureOptions options;
  options.skip_null_elements = true;
  return total_curvature(mean, obj.ground_size(), options);
}

VerificationReport verify_sga(const StochasticObjective& obj, const Matroid& m,
                              const SgaConfig& cfg, const SgaResult& result,
                              const ScenarioSet& scenarios,
                              CurvatureMethod method, double tolerance) {
  if (!cfg.gamma) throw InputError("verify_sga needs a resolved gamma");
  const std::vector<double> taus = tau_grid(*cfg.gamma, cfg.delta);
  VerificationReport r;
  r.brute_force = brute_force_opt(obj, m, scenarios, cfg.alpha, taus);
  r.curvature = auxiliary_curvature(obj, m, scenarios, cfg.alpha, taus, method);
  r.bound = guarantee_bound(r.curvature, cfg, r.brute_force.h_star);
  r.sga_h = result.h_value;
  r.slack = r.sga_h - r.bound.certified_lower_bound;
  r.bound_holds = r.slack >= -tolerance;
  r.grid_gap = r.brute_force.grid_free_opt - r.brute_force.h_star;
  r.grid_gap_holds = r.grid_gap <= cfg.delta + tolerance;
  return r;
}

UtilityStats utility_stats(std::span<const double> values) {
  if (values.empty()) throw InputError("utility_stats of an empty sample");
  UtilityStats st;
  const double n = static_cast<double>(values.size());
  st.mean = pairwise_sum(values) / n;
  std::vector<double> sq(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    sq[i] = (values[i] - st.mean) * (values[i] - st.mean);
  }
  st.stddev = std::sqrt(pairwise_sum(sq) / n);
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  st.min = *lo;
  st.max = *hi;
  return st;
}

AlphaSweep alpha_sweep(const StochasticObjective& obj, const Matroid& m,
                       const SgaConfig& cfg, std::span<const double> alphas,
                       const AlphaSweepOptions& options) {
  if (alphas.empty()) throw InputError("alpha_sweep needs at least one alpha");
  if (options.histogram_bins < 1) throw InputError("histogram_bins >= 1");
  const ScenarioSet shared = sample_scenarios(obj, cfg.samples, cfg.seed);
  const int eval_n =
      options.evaluation_samples > 0 ? options.evaluation_samples : cfg.samples;
  const ScenarioSet evaluation = sample_scenarios(
      obj, eval_n,
      mix_seed(cfg.seed, static_cast<std::uint64_t>(Stream::kEvaluation)));

  AlphaSweep out;
  out.curvature =
      options.curvature.value_or(mean_utility_curvature(obj, shared).value);
  const double gamma = resolve_gamma(obj, cfg);
  for (double a : alphas) {
    SgaConfig c = cfg;
    c.alpha = RiskLevel(a);
    AlphaSweepRow row;
    row.alpha = a;
    row.result = run_sga(obj, m, c, shared);
    row.evaluation_utilities =
        utility_sample(obj, row.result.chosen_set, evaluation).values;
    row.stats = utility_stats(row.evaluation_utilities);
    row.additive_error = additive_error(out.curvature, c.alpha, gamma);
    out.rows.push_back(std::move(row));
  }

  double lo = out.rows.front().stats.min;
  double hi = out.rows.front().stats.max;
  for (const auto& row : out.rows) {
    lo = std::min(lo, row.stats.min);
    hi = std::max(hi, row.stats.max);
  }
  if (!(hi > lo)) hi = lo + 1.0;
  const int bins = options.histogram_bins;
  for (int b = 0; b <= bins; ++b) {
    out.bin_edges.push_back(lo + (hi - lo) * b / bins);
  }
  for (auto& row : out.rows) {
    row.histogram.assign(bins, 0);
    for (double v : row.evaluation_utilities) {
      int b = static_cast<int>((v - lo) / (hi - lo) * bins);
      ++row.histogram[std::clamp(b, 0, bins - 1)];
    }
  }
  return out;
}

}  // namespace cvarsub
