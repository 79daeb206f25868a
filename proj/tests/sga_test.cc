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

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <vector>

#include "cvarsub/errors.h"
#include "cvarsub/vehicle_assignment.h"
#include "support/test_objectives.h"

namespace cvarsub {
namespace {

SgaConfig two_element_config() {
  SgaConfig cfg;
  cfg.alpha = RiskLevel(0.5);
  cfg.gamma = 2.0;
  cfg.delta = 1.0;
  cfg.samples = 1;
  return cfg;
}

TEST(TauGridTest, Arithmetic) {
  EXPECT_EQ(tau_grid(2.0, 1.0), (std::vector<double>{0, 1, 2}));
  EXPECT_EQ(tau_grid(5.0, 5.0), (std::vector<double>{0, 5}));
  // Top point overshoots gamma when delta does not divide it.
  EXPECT_EQ(tau_grid(2.5, 1.0), (std::vector<double>{0, 1, 2, 3}));
  EXPECT_EQ(grid_steps(0.3, 0.1), 3);
  EXPECT_EQ(grid_steps(1.0, 0.25), 4);
}

TEST(RunSgaTest, TwoElementExample) {
  const auto obj = testing::modular({2, 1});
  const SgaResult r =
      run_sga(*obj, Matroid::Uniform(2, 1), two_element_config());
  EXPECT_EQ(r.chosen_set, (ElementSet{0}));
  EXPECT_DOUBLE_EQ(r.chosen_tau, 2.0);
  EXPECT_DOUBLE_EQ(r.h_value, 2.0);
  EXPECT_EQ(r.chosen_index, 2);
  ASSERT_EQ(r.sweep.size(), 3u);
  EXPECT_DOUBLE_EQ(r.sweep[0].h, 0.0);
  EXPECT_DOUBLE_EQ(r.sweep[1].h, 1.0);
  EXPECT_DOUBLE_EQ(r.sweep[2].h, 2.0);
  // Greedy at each tau: H(empty) plus two candidates; one scenario each.
  for (const SweepEntry& e : r.sweep) EXPECT_EQ(e.evaluations, 3);
  EXPECT_EQ(r.oracle_evaluations, 9);
}

TEST(RunSgaTest, SweepTiesGoToSmallestTau) {
  // f = 1 on nonempty sets and alpha = 1: H = min(tau, 1), flat from tau = 1.
  const auto obj = testing::deterministic(
      2, [](const ElementSet& s) { return s.empty() ? 0.0 : 1.0; }, 3.0);
  SgaConfig cfg;
  cfg.alpha = RiskLevel(1.0);
  cfg.gamma = 3.0;
  cfg.samples = 1;
  const SgaResult r = run_sga(*obj, Matroid::Uniform(2, 1), cfg);
  EXPECT_DOUBLE_EQ(r.chosen_tau, 1.0);
  EXPECT_DOUBLE_EQ(r.h_value, 1.0);
}

TEST(RunSgaTest, DeltaEqualsGammaGivesTwoPoints) {
  const auto obj = testing::modular({2, 1});
  SgaConfig cfg = two_element_config();
  cfg.delta = 2.0;
  const SgaResult r = run_sga(*obj, Matroid::Uniform(2, 1), cfg);
  ASSERT_EQ(r.sweep.size(), 2u);
  EXPECT_EQ(r.sweep[0].tau, 0.0);
  EXPECT_EQ(r.sweep[1].tau, 2.0);
}

TEST(RunSgaTest, InvalidConfig) {
  const auto obj = testing::modular({2, 1});
  const Matroid m = Matroid::Uniform(2, 1);
  SgaConfig cfg = two_element_config();
  cfg.gamma = 0.0;
  EXPECT_THROW(run_sga(*obj, m, cfg), InputError);
  cfg.gamma = -1.0;
  EXPECT_THROW(run_sga(*obj, m, cfg), InputError);
  cfg = two_element_config();
  cfg.delta = 3.0;
  EXPECT_THROW(run_sga(*obj, m, cfg), InputError);
  cfg.delta = 0.0;
  EXPECT_THROW(run_sga(*obj, m, cfg), InputError);
  cfg = two_element_config();
  cfg.samples = 0;
  EXPECT_THROW(run_sga(*obj, m, cfg), InputError);
  EXPECT_THROW(run_sga(*obj, Matroid::Uniform(3, 1), two_element_config()),
               InputError);
}

TEST(RunSgaTest, GammaDefaultsToHint) {
  const auto obj = testing::modular({2, 1});
  SgaConfig cfg = two_element_config();
  cfg.gamma.reset();
  EXPECT_DOUBLE_EQ(resolve_gamma(*obj, cfg), 3.0);
  EXPECT_EQ(run_sga(*obj, Matroid::Uniform(2, 1), cfg).sweep.size(), 4u);
}

TEST(RunSgaTest, RiskNeutralMatchesGreedyOnMean) {
  const auto v = VehicleAssignmentObjective::Generate({4, 3, 10.0, 5});
  SgaConfig cfg;
  cfg.alpha = RiskLevel(1.0);
  cfg.samples = 300;
  cfg.seed = 9;
  const ScenarioSet sc = sample_scenarios(v, cfg.samples, cfg.seed);
  const SgaResult r = run_sga(v, v.matroid(), cfg, sc);
  const GreedyResult g = greedy_maximize(
      [&](const ElementSet& s) {
        return pairwise_sum(utility_sample(v, s, sc).values) / sc.size();
      },
      v.matroid());
  EXPECT_EQ(r.chosen_set, g.set);
  EXPECT_NEAR(r.h_value, g.value, 1e-9);
}

TEST(RunSgaTest, ChosenSetIsMaximalAndAttainsSweepMax) {
  for (int seed = 0; seed < 12; ++seed) {
    const auto inst = testing::random_instance(seed);
    SgaConfig cfg;
    cfg.alpha = RiskLevel(0.3);
    cfg.samples = 40;
    cfg.seed = seed;
    cfg.delta = resolve_gamma(*inst.objective, cfg) / 7.0;
    const SgaResult r = run_sga(*inst.objective, inst.matroid, cfg);
    EXPECT_TRUE(inst.matroid.is_independent(r.chosen_set));
    EXPECT_TRUE(inst.matroid.extension_candidates(r.chosen_set).empty());
    for (const SweepEntry& e : r.sweep) EXPECT_LE(e.h, r.h_value);
    EXPECT_EQ(r.sweep[r.chosen_index].h, r.h_value);
    EXPECT_EQ(r.sweep[r.chosen_index].tau, r.chosen_tau);
  }
}

TEST(RunSgaTest, DeterministicAcrossWorkersAndPolicies) {
  const auto v = VehicleAssignmentObjective::Generate({5, 3, 10.0, 8});
  for (ScenarioPolicy policy :
       {ScenarioPolicy::kCommonRandomNumbers, ScenarioPolicy::kFreshPerTau}) {
    SgaConfig cfg;
    cfg.alpha = RiskLevel(0.2);
    cfg.samples = 80;
    cfg.seed = 4;
    cfg.policy = policy;
    cfg.workers = 1;
    const SgaResult a = run_sga(v, v.matroid(), cfg);
    cfg.workers = 5;
    const SgaResult b = run_sga(v, v.matroid(), cfg);
    ASSERT_EQ(a.sweep.size(), b.sweep.size());
    for (std::size_t i = 0; i < a.sweep.size(); ++i) {
      EXPECT_EQ(a.sweep[i].h, b.sweep[i].h);
      EXPECT_EQ(a.sweep[i].set, b.sweep[i].set);
    }
    EXPECT_EQ(a.chosen_set, b.chosen_set);
    EXPECT_EQ(a.h_value, b.h_value);
    EXPECT_EQ(a.oracle_evaluations, b.oracle_evaluations);
  }
}

TEST(RunSgaTest, FreshPolicyDiffersFromShared) {
  const auto v = VehicleAssignmentObjective::Generate({5, 3, 10.0, 8});
  SgaConfig cfg;
  cfg.alpha = RiskLevel(0.2);
  cfg.samples = 30;
  const SgaResult crn = run_sga(v, v.matroid(), cfg);
  cfg.policy = ScenarioPolicy::kFreshPerTau;
  const SgaResult fresh = run_sga(v, v.matroid(), cfg);
  bool differs = false;
  for (std::size_t i = 1; i < crn.sweep.size(); ++i) {
    if (crn.sweep[i].h != fresh.sweep[i].h) differs = true;
  }
  EXPECT_TRUE(differs);
}

TEST(ScenarioPolicyTest, Parse) {
  EXPECT_EQ(parse_scenario_policy("crn"), ScenarioPolicy::kCommonRandomNumbers);
  EXPECT_EQ(parse_scenario_policy("fresh_per_tau"),
            ScenarioPolicy::kFreshPerTau);
  EXPECT_EQ(to_string(ScenarioPolicy::kCommonRandomNumbers),
            "common_random_numbers");
  EXPECT_THROW(parse_scenario_policy("sometimes"), InputError);
}

TEST(WorkerCountTest, ReadsEnvironment) {
  setenv(kWorkersEnv, "3", 1);
  EXPECT_EQ(default_worker_count(), 3);
  setenv(kWorkersEnv, "zero", 1);
  EXPECT_GE(default_worker_count(), 1);
  unsetenv(kWorkersEnv);
  EXPECT_GE(default_worker_count(), 1);
}

TEST(BoundTest, Examples) {
  BoundReport b = guarantee_bound(0.0, RiskLevel(0.5), 10.0, 1.0, 7.0);
  EXPECT_DOUBLE_EQ(b.certified_lower_bound, 6.0);
  EXPECT_DOUBLE_EQ(b.additive, 0.0);
  b = guarantee_bound(1.0, RiskLevel(0.5), 10.0, 1.0, 7.0);
  EXPECT_DOUBLE_EQ(b.multiplicative, 0.5);
  EXPECT_DOUBLE_EQ(b.delta_term, 0.5);
  EXPECT_DOUBLE_EQ(b.additive, 5.0);
  EXPECT_DOUBLE_EQ(b.certified_lower_bound, 0.5 * 7.0 - 0.5 - 5.0);
  for (double k : {0.0, 0.3, 1.0}) {
    EXPECT_EQ(guarantee_bound(k, RiskLevel(1.0), 50.0, 1.0, 3.0).additive, 0.0);
    EXPECT_GE(additive_error(k, RiskLevel(0.1), 5.0), 0.0);
  }
  EXPECT_THROW(guarantee_bound(1.5, RiskLevel(0.5), 1.0, 1.0, 1.0), InputError);
  SgaConfig cfg;
  EXPECT_THROW(guarantee_bound(Curvature{}, cfg, 1.0), InputError);
}

TEST(BruteForceTest, TwoElementExample) {
  const auto obj = testing::modular({2, 1});
  const ScenarioSet sc = sample_scenarios(*obj, 1, 0);
  const std::vector<double> taus{0, 1, 2};
  const BruteForceResult b =
      brute_force_opt(*obj, Matroid::Uniform(2, 1), sc, RiskLevel(0.5), taus);
  EXPECT_EQ(b.set, (ElementSet{0}));
  EXPECT_DOUBLE_EQ(b.tau, 2.0);
  EXPECT_DOUBLE_EQ(b.h_star, 2.0);
  EXPECT_EQ(b.per_tau_best, (std::vector<double>{0, 1, 2}));
  EXPECT_DOUBLE_EQ(b.grid_free_opt, 2.0);
}

TEST(BruteForceTest, RefusesAboveCap) {
  const auto obj = testing::modular(std::vector<double>(17, 1.0));
  const ScenarioSet sc = sample_scenarios(*obj, 1, 0);
  const std::vector<double> taus{0, 1};
  EXPECT_THROW(
      brute_force_opt(*obj, Matroid::Uniform(17, 1), sc, RiskLevel(0.5), taus),
      CapExceededError);
}

class VerifyPropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(VerifyPropertyTest, BoundGridGapAndPerTauGreedy) {
  const auto inst = testing::random_instance(1000 + GetParam());
  SgaConfig cfg;
  cfg.alpha = RiskLevel(GetParam() % 2 ? 0.25 : 0.8);
  cfg.samples = 25;
  cfg.seed = GetParam();
  cfg.gamma = inst.objective->gamma_hint();
  cfg.delta = *cfg.gamma / 6.0;
  const ScenarioSet sc =
      sample_scenarios(*inst.objective, cfg.samples, cfg.seed);
  const SgaResult r = run_sga(*inst.objective, inst.matroid, cfg, sc);
  const VerificationReport v =
      verify_sga(*inst.objective, inst.matroid, cfg, r, sc);
  EXPECT_TRUE(v.bound_holds) << v.slack;
  EXPECT_TRUE(v.grid_gap_holds) << v.grid_gap;
  EXPECT_GE(v.brute_force.h_star, 0.0);
  EXPECT_LE(r.h_value, v.brute_force.h_star + 1e-12);
  EXPECT_GE(v.curvature.value, 0.0);
  EXPECT_LE(v.curvature.value, 1.0);
  // Per-tau greedy against the per-tau optimum with the tau-specific
  // normalized function g = H(., tau) - H(empty, tau).
  const std::vector<double> taus = tau_grid(*cfg.gamma, cfg.delta);
  for (std::size_t i = 0; i < taus.size(); ++i) {
    const double base =
        auxiliary_h(*inst.objective, {}, taus[i], sc, cfg.alpha);
    const double g_greedy = r.sweep[i].h - base;
    const double g_opt = v.brute_force.per_tau_best[i] - base;
    EXPECT_GE(g_greedy, g_opt / (1.0 + v.curvature.value) - 1e-9);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, VerifyPropertyTest, ::testing::Range(0, 16));

TEST(CurvatureOfHTest, ModularObjectiveHasZeroCurvatureAtAlphaOne) {
  const auto obj = testing::modular({1, 2, 3});
  const ScenarioSet sc = sample_scenarios(*obj, 1, 0);
  const std::vector<double> taus{0, 2, 4, 6};
  // With alpha = 1 and tau above every f, H = f - constant: modular.
  const std::vector<double> high{6};
  EXPECT_NEAR(
      auxiliary_curvature(*obj, Matroid::Uniform(3, 3), sc, RiskLevel(1.0),
                          high, CurvatureMethod::kExactMatroidEnumeration)
          .value,
      0.0, 1e-12);
  const Curvature k =
      auxiliary_curvature(*obj, Matroid::Uniform(3, 2), sc, RiskLevel(0.5),
                          taus, CurvatureMethod::kTotalOverGroundSet);
  EXPECT_GE(k.value, 0.0);
  EXPECT_LE(k.value, 1.0);
  EXPECT_NEAR(mean_utility_curvature(*obj, sc).value, 0.0, 1e-12);
}

TEST(UtilityStatsTest, Population) {
  const UtilityStats s = utility_stats(std::vector<double>{1, 2, 3, 4});
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  EXPECT_DOUBLE_EQ(s.stddev, std::sqrt(1.25));
  EXPECT_EQ(s.min, 1.0);
  EXPECT_EQ(s.max, 4.0);
}

TEST(AlphaSweepTest, SingleAlphaAndHistogram) {
  const auto v = VehicleAssignmentObjective::Generate({4, 3, 10.0, 2});
  SgaConfig cfg;
  cfg.samples = 100;
  AlphaSweepOptions opts;
  opts.histogram_bins = 7;
  const std::vector<double> alphas{0.3};
  const AlphaSweep sw = alpha_sweep(v, v.matroid(), cfg, alphas, opts);
  ASSERT_EQ(sw.rows.size(), 1u);
  EXPECT_EQ(sw.bin_edges.size(), 8u);
  int total = 0;
  for (int c : sw.rows[0].histogram) total += c;
  EXPECT_EQ(total, 100);
  EXPECT_EQ(sw.rows[0].evaluation_utilities.size(), 100u);
  EXPECT_THROW(alpha_sweep(v, v.matroid(), cfg, std::vector<double>{}, opts),
               InputError);
}

TEST(AlphaSweepTest, TrendOnVehicleInstance) {
  const auto v = VehicleAssignmentObjective::Generate({6, 4, 10.0, 42});
  SgaConfig cfg;
  cfg.samples = 400;
  cfg.seed = 42;
  const std::vector<double> alphas{0.1, 1.0};
  const AlphaSweep sw = alpha_sweep(v, v.matroid(), cfg, alphas);
  EXPECT_LE(sw.rows[0].result.h_value, sw.rows[1].result.h_value);
  EXPECT_EQ(sw.rows[1].additive_error, 0.0);
  EXPECT_GE(sw.rows[0].additive_error, 0.0);
}

}  // namespace
}  // namespace cvarsub
