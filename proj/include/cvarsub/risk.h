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

#ifndef CVARSUB_RISK_H_
#define CVARSUB_RISK_H_

#include <cstdint>
#include <span>
#include <vector>

#include "cvarsub/element_set.h"
#include "cvarsub/objective.h"

namespace cvarsub {

// Risk level alpha in (0, 1]: the probability mass of the worst-case tail.
// alpha = 1 is the risk-neutral expectation.
class RiskLevel {
 public:
  // Throws InputError outside (0, 1].
  explicit RiskLevel(double alpha);
  double value() const { return alpha_; }
  bool risk_neutral() const { return alpha_ == 1.0; }

 private:
  double alpha_;
};

// f(S, y) materialized over a scenario set, in scenario order.
struct UtilitySample {
  std::vector<double> values;
  ElementSet set;
  std::uint64_t scenario_seed = 0;
};

// Throws InputError when the objective returns a negative or non-finite
// value.
UtilitySample utility_sample(const StochasticObjective& obj,
                             const ElementSet& s, const ScenarioSet& scenarios);

// Pairwise (cascade) summation in a fixed tree shape: the result depends only
// on the input sequence, never on how the work was scheduled.
double pairwise_sum(std::span<const double> values);

// Number of order statistics in the alpha-tail, ceil(alpha * n), computed so
// that alpha * n landing a rounding error above an integer does not add an
// extra sample. Always in [1, n].
int tail_count(int n, RiskLevel alpha);

// Smallest sample value t with empirical CDF(t) >= alpha, i.e. the
// ceil(alpha * n)-th order statistic. Throws InputError on an empty sample.
double empirical_var(std::span<const double> values, RiskLevel alpha);

// Mean of the worst alpha-fraction of the sample with the boundary order
// statistic weighted fractionally:
//   (sum_{i<k} v_(i) + (alpha n - (k-1)) v_(k)) / (alpha n),  k = ceil(alpha
//   n).
// With this weighting max_tau H(S, tau) equals the estimate exactly on the
// sample. Throws InputError on an empty sample.
double empirical_cvar(std::span<const double> values, RiskLevel alpha);

inline double empirical_var(const UtilitySample& u, RiskLevel alpha) {
  return empirical_var(u.values, alpha);
}
inline double empirical_cvar(const UtilitySample& u, RiskLevel alpha) {
  return empirical_cvar(u.values, alpha);
}

// H(S, tau) = tau - 1/(n alpha) * sum_y (tau - f(S, y))_+ on a sample of
// utilities. Throws PreconditionError for tau < 0.
double auxiliary_h(std::span<const double> utilities, double tau,
                   RiskLevel alpha);

// Same, evaluating f(S, y) over every scenario first.
double auxiliary_h(const StochasticObjective& obj, const ElementSet& s,
                   double tau, const ScenarioSet& scenarios, RiskLevel alpha);

struct CvarOfSet {
  double cvar = 0.0;
  // Maximizer of H(S, .): the empirical VaR.
  double tau_star = 0.0;
};

CvarOfSet cvar_of_set(std::span<const double> utilities, RiskLevel alpha);
CvarOfSet cvar_of_set(const StochasticObjective& obj, const ElementSet& s,
                      const ScenarioSet& scenarios, RiskLevel alpha);

}  // namespace cvarsub

#endif  // CVARSUB_RISK_H_
