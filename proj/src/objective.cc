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

#include "cvarsub/objective.h"

#include <utility>

#include "cvarsub/errors.h"

namespace cvarsub {

ScenarioSet::ScenarioSet(std::uint64_t seed, std::vector<Scenario> scenarios)
    : seed_(seed), scenarios_(std::move(scenarios)) {
  if (scenarios_.empty()) throw InputError("a scenario set needs n_s >= 1");
}

void StochasticObjective::check_ids(const ElementSet& s) const {
  const int n = ground_size();
  for (int id : s) {
    if (id < 0 || id >= n) {
      throw InputError("element id " + std::to_string(id) +
                       " outside the ground set of " + name());
    }
  }
}

ScenarioSet sample_scenarios(const StochasticObjective& obj, int n_s,
                             std::uint64_t seed) {
  if (n_s < 1) throw InputError("sample_scenarios: n_s must be >= 1");
  std::vector<Scenario> out;
  out.reserve(n_s);
  for (int i = 0; i < n_s; ++i) out.push_back(obj.draw_scenario(seed, i));
  return ScenarioSet(seed, std::move(out));
}

FunctionObjective::FunctionObjective(int ground_size, EvalFn eval, DrawFn draw,
                                     double gamma_hint, std::string name)
    : ground_size_(ground_size),
      eval_(std::move(eval)),
      draw_(std::move(draw)),
      gamma_hint_(gamma_hint),
      name_(std::move(name)) {
  if (ground_size_ < 1) throw InputError("ground size must be >= 1");
}

double FunctionObjective::evaluate(const ElementSet& s,
                                   const Scenario& sc) const {
  check_ids(s);
  return eval_(s, sc);
}

Scenario FunctionObjective::draw_scenario(std::uint64_t seed, int index) const {
  Scenario sc = draw_(seed, index);
  sc.index = index;
  return sc;
}

}  // namespace cvarsub
