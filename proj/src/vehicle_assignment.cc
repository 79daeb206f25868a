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

#include "cvarsub/vehicle_assignment.h"

#include <algorithm>
#include <cmath>
#include <utility>

#include "cvarsub/errors.h"
#include "cvarsub/rng.h"

namespace cvarsub {

namespace {

double distance(const Point& a, const Point& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

}  // namespace

VehicleAssignmentObjective VehicleAssignmentObjective::Generate(
    const VehicleAssignmentParams& p) {
  if (p.vehicles < 1 || p.demands < 1) {
    throw InputError("vehicle instance needs R >= 1 and N >= 1");
  }
  if (!(p.side > 0.0) || !std::isfinite(p.side)) {
    throw InputError("vehicle instance needs a positive finite side");
  }
  KeyedRng rng(p.seed, Stream::kGeometry);
  auto draw_point = [&] {
    double x = rng.uniform(0.0, p.side);
    double y = rng.uniform(0.0, p.side);
    return Point{x, y};
  };
  std::vector<Point> demands;
  for (int i = 0; i < p.demands; ++i) demands.push_back(draw_point());
  std::vector<Point> vehicles;
  for (int j = 0; j < p.vehicles; ++j) {
    Point v = draw_point();
    while (std::any_of(demands.begin(), demands.end(),
                       [&](const Point& d) { return distance(d, v) == 0.0; })) {
      v = draw_point();
    }
    vehicles.push_back(v);
  }
  return VehicleAssignmentObjective(std::move(demands), std::move(vehicles),
                                    p.side);
}

VehicleAssignmentObjective::VehicleAssignmentObjective(
    std::vector<Point> demand_positions, std::vector<Point> vehicle_positions,
    double side)
    : demand_pos_(std::move(demand_positions)),
      vehicle_pos_(std::move(vehicle_positions)),
      side_(side) {
  if (demand_pos_.empty() || vehicle_pos_.empty()) {
    throw InputError("vehicle instance needs R >= 1 and N >= 1");
  }
  const int n = ground_size();
  mean_.resize(n);
  for (int i = 0; i < demands(); ++i) {
    for (int j = 0; j < vehicles(); ++j) {
      double d = distance(demand_pos_[i], vehicle_pos_[j]);
      if (!(d > 0.0)) {
        throw InputError("demand " + std::to_string(i) + " and vehicle " +
                         std::to_string(j) + " are coincident");
      }
      mean_[element_id(i, j)] = 10.0 / d;
    }
  }
  max_mean_ = *std::max_element(mean_.begin(), mean_.end());
  lower_.resize(n);
  upper_.resize(n);
  for (int id = 0; id < n; ++id) {
    double half_width = std::pow(mean_[id], 2.5) / max_mean_;
    lower_[id] = std::max(0.0, mean_[id] - half_width);
    upper_[id] = mean_[id] + half_width;
  }
}

double VehicleAssignmentObjective::evaluate(const ElementSet& s,
                                            const Scenario& sc) const {
  check_ids(s);
  if (static_cast<int>(sc.payload.size()) != ground_size()) {
    throw InputError("vehicle scenario payload has the wrong size");
  }
  // Ids are demand-major and s is sorted, so each demand's pairs are
  // contiguous in s.
  double total = 0.0;
  int current = -1;
  double best = 0.0;
  for (int id : s) {
    int demand = demand_of(id);
    if (demand != current) {
      total += best;
      best = 0.0;
      current = demand;
    }
    best = std::max(best, sc.payload[id]);
  }
  return total + best;
}

Scenario VehicleAssignmentObjective::draw_scenario(std::uint64_t seed,
                                                   int index) const {
  KeyedRng rng(seed, Stream::kScenario, static_cast<std::uint64_t>(index));
  Scenario sc;
  sc.index = index;
  sc.payload.resize(ground_size());
  for (int id = 0; id < ground_size(); ++id) {
    sc.payload[id] = rng.uniform(lower_[id], upper_[id]);
  }
  return sc;
}

double VehicleAssignmentObjective::gamma_hint() const {
  return demands() * *std::max_element(upper_.begin(), upper_.end());
}

Matroid VehicleAssignmentObjective::matroid() const {
  std::vector<std::vector<int>> blocks(vehicles());
  for (int j = 0; j < vehicles(); ++j) {
    for (int i = 0; i < demands(); ++i) {
      blocks[j].push_back(element_id(i, j));
    }
  }
  return Matroid::Partition(ground_size(), std::move(blocks),
                            std::vector<int>(vehicles(), 1));
}

GroundSet VehicleAssignmentObjective::ground_set() const {
  std::vector<std::string> labels;
  for (int id = 0; id < ground_size(); ++id) {
    labels.push_back("d" + std::to_string(demand_of(id)) + ":v" +
                     std::to_string(vehicle_of(id)));
  }
  return GroundSet(ground_size(), std::move(labels));
}

}  // namespace cvarsub
