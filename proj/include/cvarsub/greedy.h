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

#ifndef CVARSUB_GREEDY_H_
#define CVARSUB_GREEDY_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cvarsub/element_set.h"
#include "cvarsub/matroid.h"

namespace cvarsub {

using SetFunction = std::function<double(const ElementSet&)>;

struct GreedyPick {
  int element = -1;
  double gain = 0.0;
};

struct GreedyTrace {
  std::vector<GreedyPick> picks;
  // Calls made to the set function, including the initial h(empty set).
  std::int64_t evaluations = 0;
};

struct GreedyResult {
  ElementSet set;
  double value = 0.0;
  GreedyTrace trace;
};

// Deterministic greedy over a matroid: start from the empty set and, while
// some element can be added without losing independence, add the one with
// the largest marginal gain. Ties go to the smallest id. The loop runs until
// the set is a maximal independent set, so negative gains are accepted.
GreedyResult greedy_maximize(const SetFunction& h, const Matroid& m);

enum class CurvatureMethod { kTotalOverGroundSet, kExactMatroidEnumeration };

std::string to_string(CurvatureMethod method);

struct Curvature {
  double value = 0.0;
  CurvatureMethod method = CurvatureMethod::kTotalOverGroundSet;
};

struct CurvatureOptions {
  // Drop elements with f({s}) == 0 from the minimum instead of failing.
  // Such elements add nothing to any set of a monotone submodular f. If all
  // elements are null the curvature is reported as 0.
  bool skip_null_elements = false;
  // f({s}) <= null_tolerance * max(1, max_s f({s})) counts as zero.
  double null_tolerance = 1e-12;
};

// k = 1 - min_s [f(X) - f(X - s)] / f({s}) over the whole ground set,
// clamped to [0, 1]. f must be normalized. Throws UndefinedCurvatureError
// when some f({s}) is zero (unless skipped via options).
Curvature total_curvature(const SetFunction& f, int ground_size,
                          const CurvatureOptions& options = {});

// k = 1 - min over independent S and s in S of [f(S) - f(S - s)] / f({s}).
// Exponential; throws CapExceededError above `cap` elements, in which case
// total_curvature is the practical fallback.
Curvature matroid_curvature(const SetFunction& f, const Matroid& m,
                            int cap = kDefaultEnumerationCap,
                            const CurvatureOptions& options = {});

}  // namespace cvarsub

#endif  // CVARSUB_GREEDY_H_
