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

#ifndef CVARSUB_OBJECTIVE_H_
#define CVARSUB_OBJECTIVE_H_

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "cvarsub/element_set.h"

namespace cvarsub {

// One realization of the random variable y. The payload layout is owned by
// the objective that drew it (an efficiency matrix, a success-bit vector...).
struct Scenario {
  int index = 0;
  std::vector<double> payload;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// n_s scenarios drawn from one seed. Scenario i depends only on
// (objective, seed, i), so any prefix or single member can be regenerated.
class ScenarioSet {
 public:
  ScenarioSet(std::uint64_t seed, std::vector<Scenario> scenarios);

  std::uint64_t seed() const { return seed_; }
  int size() const { return static_cast<int>(scenarios_.size()); }
  const Scenario& operator[](int i) const { return scenarios_[i]; }
  auto begin() const { return scenarios_.begin(); }
  auto end() const { return scenarios_.end(); }

  friend bool operator==(const ScenarioSet&, const ScenarioSet&) = default;

 private:
  std::uint64_t seed_;
  std::vector<Scenario> scenarios_;
};

// f(S, y): for each fixed scenario a normalized, monotone, submodular set
// function of S with nonnegative values. Implementations are immutable and
// evaluate() must be safe to call concurrently.
class StochasticObjective {
 public:
  virtual ~StochasticObjective() = default;

  virtual int ground_size() const = 0;
  // Throws InputError on ids outside [0, ground_size()).
  virtual double evaluate(const ElementSet& s, const Scenario& sc) const = 0;
  virtual Scenario draw_scenario(std::uint64_t seed, int index) const = 0;
  // An upper bound on f(S, y) over all S and y, used as the default tau
  // range of the sweep.
  virtual double gamma_hint() const = 0;
  virtual std::string name() const = 0;

 protected:
  void check_ids(const ElementSet& s) const;
};

// Throws InputError when n_s < 1.
ScenarioSet sample_scenarios(const StochasticObjective& obj, int n_s,
                             std::uint64_t seed);

// Adapts a pair of callables to the objective contract. Mostly useful for
// synthetic objectives in experiments and tests.
class FunctionObjective : public StochasticObjective {
 public:
  using EvalFn = std::function<double(const ElementSet&, const Scenario&)>;
  using DrawFn = std::function<Scenario(std::uint64_t seed, int index)>;

  FunctionObjective(int ground_size, EvalFn eval, DrawFn draw,
                    double gamma_hint, std::string name = "function");

  int ground_size() const override { return ground_size_; }
  double evaluate(const ElementSet& s, const Scenario& sc) const override;
  Scenario draw_scenario(std::uint64_t seed, int index) const override;
  double gamma_hint() const override { return gamma_hint_; }
  std::string name() const override { return name_; }

 private:
  int ground_size_;
  EvalFn eval_;
  DrawFn draw_;
  double gamma_hint_;
  std::string name_;
};

}  // namespace cvarsub

#endif  // CVARSUB_OBJECTIVE_H_
