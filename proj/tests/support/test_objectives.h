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

#ifndef CVARSUB_TESTS_SUPPORT_TEST_OBJECTIVES_H_
#define CVARSUB_TESTS_SUPPORT_TEST_OBJECTIVES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <memory>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "cvarsub/element_set.h"
#include "cvarsub/matroid.h"
#include "cvarsub/objective.h"
#include "cvarsub/rng.h"

namespace cvarsub::testing {

// Deterministic objective with a single fixed scenario.
inline std::shared_ptr<FunctionObjective> deterministic(
    int n, std::function<double(const ElementSet&)> f, double gamma) {
  return std::make_shared<FunctionObjective>(
      n, [f](const ElementSet& s, const Scenario&) { return f(s); },
      [](std::uint64_t, int index) { return Scenario{index, {}}; }, gamma,
      "deterministic");
}

// Modular deterministic objective.
inline std::shared_ptr<FunctionObjective> modular(std::vector<double> w) {
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  const int n = static_cast<int>(w.size());
  return deterministic(
      n,
      [w](const ElementSet& s) {
        double v = 0.0;
        for (int id : s) v += w[id];
        return v;
      },
      total);
}

// f({0}, y) = y with y ~ U(0, 1); closed-form CVaR_alpha = alpha / 2.
inline std::shared_ptr<FunctionObjective> uniform_single() {
  return std::make_shared<FunctionObjective>(
      1,
      [](const ElementSet& s, const Scenario& sc) {
        return s.empty() ? 0.0 : sc.payload[0];
      },
      [](std::uint64_t seed, int index) {
        KeyedRng rng(seed, Stream::kScenario, index);
        return Scenario{index, {rng.uniform()}};
      },
      1.0, "uniform");
}

// Weighted coverage where each element fails independently. Payload: one
// success bit per element.
inline std::shared_ptr<FunctionObjective> random_coverage(std::uint64_t seed,
                                                          int n) {
  std::mt19937_64 gen(seed);
  const int universe = 4 + static_cast<int>(gen() % 8);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> weight(universe);
  for (double& w : weight) w = 0.5 + 2.0 * unit(gen);
  std::vector<std::vector<int>> cover(n);
  std::vector<double> p(n);
  for (int i = 0; i < n; ++i) {
    for (int c = 0; c < universe; ++c) {
      if (unit(gen) < 0.35) cover[i].push_back(c);
    }
    if (cover[i].empty())
      cover[i].push_back(static_cast<int>(gen() % universe));
    p[i] = 0.3 + 0.7 * unit(gen);
  }
  const double gamma = std::accumulate(weight.begin(), weight.end(), 0.0);
  return std::make_shared<FunctionObjective>(
      n,
      [cover, weight](const ElementSet& s, const Scenario& sc) {
        std::vector<char> hit(weight.size(), 0);
        for (int id : s) {
          if (sc.payload[id] == 0.0) continue;
          for (int c : cover[id]) hit[c] = 1;
        }
        double v = 0.0;
        for (std::size_t c = 0; c < hit.size(); ++c) {
          if (hit[c]) v += weight[c];
        }
        return v;
      },
      [p](std::uint64_t seed, int index) {
        KeyedRng rng(seed, Stream::kScenario, index);
        Scenario sc{index, std::vector<double>(p.size())};
        for (std::size_t i = 0; i < p.size(); ++i) {
          sc.payload[i] = rng.bernoulli(p[i]) ? 1.0 : 0.0;
        }
        return sc;
      },
      gamma, "coverage");
}

// sqrt of a random nonnegative weight sum; payload: one weight per element.
inline std::shared_ptr<FunctionObjective> random_concave(std::uint64_t seed,
                                                         int n) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> lo(n), hi(n);
  for (int i = 0; i < n; ++i) {
    lo[i] = 4.0 * unit(gen);
    hi[i] = lo[i] + 6.0 * unit(gen);
  }
  const double gamma = std::sqrt(std::accumulate(hi.begin(), hi.end(), 0.0));
  return std::make_shared<FunctionObjective>(
      n,
      [](const ElementSet& s, const Scenario& sc) {
        double v = 0.0;
        for (int id : s) v += sc.payload[id];
        return std::sqrt(v);
      },
      [lo, hi](std::uint64_t seed, int index) {
        KeyedRng rng(seed, Stream::kScenario, index);
        Scenario sc{index, std::vector<double>(lo.size())};
        for (std::size_t i = 0; i < lo.size(); ++i) {
          sc.payload[i] = rng.uniform(lo[i], hi[i]);
        }
        return sc;
      },
      gamma, "concave");
}

// Facility location: sum over clients of the best random benefit in S.
// Payload: n x clients benefit matrix, row-major.
inline std::shared_ptr<FunctionObjective> random_facility(std::uint64_t seed,
                                                          int n) {
  std::mt19937_64 gen(seed);
  const int clients = 2 + static_cast<int>(gen() % 5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> base(n * clients);
  for (double& b : base) b = 3.0 * unit(gen);
  double gamma = 0.0;
  for (int c = 0; c < clients; ++c) {
    double best = 0.0;
    for (int i = 0; i < n; ++i) best = std::max(best, base[i * clients + c]);
    gamma += 2.0 * best;
  }
  return std::make_shared<FunctionObjective>(
      n,
      [clients](const ElementSet& s, const Scenario& sc) {
        double v = 0.0;
        for (int c = 0; c < clients; ++c) {
          double best = 0.0;
          for (int id : s) best = std::max(best, sc.payload[id * clients + c]);
          v += best;
        }
        return v;
      },
      [base](std::uint64_t seed, int index) {
        KeyedRng rng(seed, Stream::kScenario, index);
        Scenario sc{index, base};
        for (double& b : sc.payload) b *= rng.uniform(0.0, 2.0);
        return sc;
      },
      gamma, "facility");
}

// Uniform with random capacity, or a random partition with random
// capacities.
inline Matroid random_matroid(std::uint64_t seed, int n, bool uniform) {
  std::mt19937_64 gen(seed ^ 0x5bd1e995u);
  if (uniform) return Matroid::Uniform(n, 1 + static_cast<int>(gen() % n));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), gen);
  const int blocks = 1 + static_cast<int>(gen() % std::min(n, 4));
  std::vector<std::vector<int>> b(blocks);
  for (int i = 0; i < n; ++i) {
    b[i < blocks ? i : static_cast<int>(gen() % blocks)].push_back(perm[i]);
  }
  std::vector<int> caps(blocks);
  for (int i = 0; i < blocks; ++i) {
    caps[i] = 1 + static_cast<int>(gen() % b[i].size());
  }
  return Matroid::Partition(n, b, caps);
}

struct RandomInstance {
  std::shared_ptr<FunctionObjective> objective;
  Matroid matroid;
};

// Rotates through the three objective families; |X| in [3, 8]; uniform and
// partition matroids alternate.
inline RandomInstance random_instance(std::uint64_t seed) {
  std::mt19937_64 gen(seed * 0x9e3779b97f4a7c15ULL + 17);
  const int n = 3 + static_cast<int>(gen() % 6);
  std::shared_ptr<FunctionObjective> obj;
  switch (seed % 3) {
    case 0:
      obj = random_coverage(gen(), n);
      break;
    case 1:
      obj = random_concave(gen(), n);
      break;
    default:
      obj = random_facility(gen(), n);
      break;
  }
  return {obj, random_matroid(gen(), n, (seed / 3) % 2 == 0)};
}

// Exhaustive maximum of h over the matroid.
inline double brute_force_max(const std::function<double(const ElementSet&)>& h,
                              const Matroid& m) {
  double best = -1e300;
  for (const ElementSet& s : enumerate_feasible(m)) best = std::max(best, h(s));
  return best;
}

}  // namespace cvarsub::testing

#endif  // CVARSUB_TESTS_SUPPORT_TEST_OBJECTIVES_H_
