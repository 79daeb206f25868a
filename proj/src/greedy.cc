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

#include "cvarsub/greedy.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>

#include "cvarsub/errors.h"

namespace cvarsub {

GreedyResult greedy_maximize(const SetFunction& h, const Matroid& m) {
  GreedyResult out;
  out.value = h(out.set);
  out.trace.evaluations = 1;
  while (true) {
    const ElementSet candidates = m.extension_candidates(out.set);
    if (candidates.empty()) break;
    int best = -1;
    double best_value = -std::numeric_limits<double>::infinity();
    for (int c : candidates) {
      const double v = h(out.set.with(c));
      ++out.trace.evaluations;
      if (std::isnan(v)) {
        throw InputError("set function returned NaN for " +
                         out.set.with(c).to_string());
      }
      // Strict comparison over ascending ids keeps the smallest id on ties.
      if (best == -1 || v > best_value) {
        best = c;
        best_value = v;
      }
    }
    out.trace.picks.push_back(GreedyPick{best, best_value - out.value});
    out.set.insert(best);
    out.value = best_value;
  }
  return out;
}

std::string to_string(CurvatureMethod method) {
  switch (method) {
    case CurvatureMethod::kTotalOverGroundSet:
      return "total_over_ground_set";
    case CurvatureMethod::kExactMatroidEnumeration:
      return "exact_matroid_enumeration";
  }
  return "unknown";
}

namespace {

// Singleton values with null elements flagged per the options.
std::vector<double> singletons(const SetFunction& f, int n,
                               const CurvatureOptions& options,
                               std::vector<bool>& usable) {
  std::vector<double> single(n);
  double scale = 1.0;
  for (int s = 0; s < n; ++s) {
    single[s] = f(ElementSet{s});
    scale = std::max(scale, single[s]);
  }
  usable.assign(n, true);
  for (int s = 0; s < n; ++s) {
    if (single[s] > options.null_tolerance * scale) continue;
    if (!options.skip_null_elements) {
      throw UndefinedCurvatureError("curvature undefined: f({" +
                                    std::to_string(s) + "}) is zero");
    }
    usable[s] = false;
  }
  return single;
}

double clamp_curvature(double min_ratio) {
  if (!std::isfinite(min_ratio)) return 0.0;
  return std::clamp(1.0 - min_ratio, 0.0, 1.0);
}

}  // namespace

Curvature total_curvature(const SetFunction& f, int ground_size,
                          const CurvatureOptions& options) {
  if (ground_size < 1) throw InputError("ground size must be >= 1");
  std::vector<bool> usable;
  const std::vector<double> single =
      singletons(f, ground_size, options, usable);
  std::vector<int> all(ground_size);
  for (int i = 0; i < ground_size; ++i) all[i] = i;
  const ElementSet everything(all);
  const double full = f(everything);
  double min_ratio = std::numeric_limits<double>::infinity();
  for (int s = 0; s < ground_size; ++s) {
    if (!usable[s]) continue;
    min_ratio =
        std::min(min_ratio, (full - f(everything.without(s))) / single[s]);
  }
  return Curvature{clamp_curvature(min_ratio),
                   CurvatureMethod::kTotalOverGroundSet};
}

Curvature matroid_curvature(const SetFunction& f, const Matroid& m, int cap,
                            const CurvatureOptions& options) {
  const std::vector<ElementSet> feasible = enumerate_feasible(m, cap);
  const int n = m.ground_size();
  std::vector<bool> usable;
  const std::vector<double> single = singletons(f, n, options, usable);

  auto mask_of = [](const ElementSet& s) {
    std::uint32_t mask = 0;
    for (int id : s) mask |= std::uint32_t{1} << id;
    return mask;
  };
  // Independence is downward closed, so every S - s is in the table.
  std::vector<double> value(std::size_t{1} << n,
                            std::numeric_limits<double>::quiet_NaN());
  for (const ElementSet& s : feasible) value[mask_of(s)] = f(s);

  double min_ratio = std::numeric_limits<double>::infinity();
  for (const ElementSet& s : feasible) {
    const std::uint32_t mask = mask_of(s);
    for (int id : s) {
      if (!usable[id]) continue;
      const double marginal =
          value[mask] - value[mask & ~(std::uint32_t{1} << id)];
      min_ratio = std::min(min_ratio, marginal / single[id]);
    }
  }
  return Curvature{clamp_curvature(min_ratio),
                   CurvatureMethod::kExactMatroidEnumeration};
}

}  // namespace cvarsub
