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

#include "cvarsub/risk.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "cvarsub/errors.h"

namespace cvarsub {

RiskLevel::RiskLevel(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw InputError("risk level must lie in (0, 1], got " +
                     std::to_string(alpha));
  }
}

UtilitySample utility_sample(const StochasticObjective& obj,
                             const ElementSet& s,
                             const ScenarioSet& scenarios) {
  UtilitySample out;
  out.set = s;
  out.scenario_seed = scenarios.seed();
  out.values.reserve(scenarios.size());
  for (const Scenario& sc : scenarios) {
    double v = obj.evaluate(s, sc);
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw InputError(obj.name() +
                       " returned a negative or non-finite "
                       "utility for " +
                       s.to_string());
    }
    out.values.push_back(v);
  }
  return out;
}

double pairwise_sum(std::span<const double> values) {
  constexpr std::size_t kLeaf = 8;
  if (values.size() <= kLeaf) {
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

int tail_count(int n, RiskLevel alpha) {
  const double scaled = alpha.value() * n;
  int k = static_cast<int>(std::ceil(scaled - 1e-9 * std::max(1.0, scaled)));
  return std::clamp(k, 1, n);
}

namespace {

std::vector<double> sorted_copy(std::span<const double> values) {
  if (values.empty()) throw InputError("risk estimate of an empty sample");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

// (sum_{i<k} v_i + (alpha n - k + 1) v_k) / (alpha n), rewritten as
// v_k - sum_{i<k} (v_k - v_i) / (alpha n) so the result never exceeds VaR.
double cvar_sorted(const std::vector<double>& sorted, RiskLevel alpha) {
  const int n = static_cast<int>(sorted.size());
  const int k = tail_count(n, alpha);
  const double var = sorted[k - 1];
  std::vector<double> deficit(k - 1);
  for (int i = 0; i + 1 < k; ++i) deficit[i] = var - sorted[i];
  return var - pairwise_sum(deficit) / (alpha.value() * n);
}

}  // namespace

double empirical_var(std::span<const double> values, RiskLevel alpha) {
  std::vector<double> sorted = sorted_copy(values);
  return sorted[tail_count(static_cast<int>(sorted.size()), alpha) - 1];
}

double empirical_cvar(std::span<const double> values, RiskLevel alpha) {
  return cvar_sorted(sorted_copy(values), alpha);
}

double auxiliary_h(std::span<const double> utilities, double tau,
                   RiskLevel alpha) {
  if (tau < 0.0) throw PreconditionError("auxiliary_h needs tau >= 0");
  if (utilities.empty()) throw InputError("auxiliary_h of an empty sample");
  std::vector<double> hinge(utilities.size());
  for (std::size_t i = 0; i < utilities.size(); ++i) {
    hinge[i] = std::max(tau - utilities[i], 0.0);
  }
  const double n = static_cast<double>(utilities.size());
  return tau - pairwise_sum(hinge) / (n * alpha.value());
}

double auxiliary_h(const StochasticObjective& obj, const ElementSet& s,
                   double tau, const ScenarioSet& scenarios, RiskLevel alpha) {
  if (tau < 0.0) throw PreconditionError("auxiliary_h needs tau >= 0");
  std::vector<double> hinge(scenarios.size());
  for (int i = 0; i < scenarios.size(); ++i) {
    hinge[i] = std::max(tau - obj.evaluate(s, scenarios[i]), 0.0);
  }
  const double n = static_cast<double>(scenarios.size());
  return tau - pairwise_sum(hinge) / (n * alpha.value());
}

CvarOfSet cvar_of_set(std::span<const double> utilities, RiskLevel alpha) {
  std::vector<double> sorted = sorted_copy(utilities);
  const int k = tail_count(static_cast<int>(sorted.size()), alpha);
  return CvarOfSet{cvar_sorted(sorted, alpha), sorted[k - 1]};
}

CvarOfSet cvar_of_set(const StochasticObjective& obj, const ElementSet& s,
                      const ScenarioSet& scenarios, RiskLevel alpha) {
  return cvar_of_set(utility_sample(obj, s, scenarios).values, alpha);
}

}  // namespace cvarsub
