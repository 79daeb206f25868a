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

#ifndef CVARSUB_VEHICLE_ASSIGNMENT_H_
#define CVARSUB_VEHICLE_ASSIGNMENT_H_

#include <cstdint>
#include <string>
#include <vector>

#include "cvarsub/matroid.h"
#include "cvarsub/objective.h"

namespace cvarsub {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

struct VehicleAssignmentParams {
  int vehicles = 6;
  int demands = 4;
  double side = 10.0;
  std::uint64_t seed = 0;
};

// Redundant vehicle-to-demand assignment under arrival-efficiency
// uncertainty.
//
// Element id `demand * vehicles + vehicle` stands for the pair (demand,
// vehicle). The mean efficiency of a pair is 10 / distance, and each draw is
// uniform on [mean - w, mean + w] with w = mean^2.5 / max_mean, the lower
// endpoint clamped at 0. A scenario payload is the full demand-major matrix
// of drawn efficiencies, so every candidate set is scored against the same
// draws. The utility is the sum over demands of the best efficiency among
// the vehicles assigned to that demand; an unserved demand contributes 0.
class VehicleAssignmentObjective : public StochasticObjective {
 public:
  // Samples demand and vehicle positions uniformly in [0, side]^2, redrawing
  // a vehicle that lands exactly on a demand location.
  static VehicleAssignmentObjective Generate(const VehicleAssignmentParams& p);

  // Throws InputError on empty inputs or coincident demand/vehicle points.
  VehicleAssignmentObjective(std::vector<Point> demand_positions,
                             std::vector<Point> vehicle_positions, double side);

  int ground_size() const override { return demands() * vehicles(); }
  double evaluate(const ElementSet& s, const Scenario& sc) const override;
  Scenario draw_scenario(std::uint64_t seed, int index) const override;
  // demands * max upper endpoint; no draw can exceed it.
  double gamma_hint() const override;
  std::string name() const override { return "vehicle"; }

  int demands() const { return static_cast<int>(demand_pos_.size()); }
  int vehicles() const { return static_cast<int>(vehicle_pos_.size()); }
  double side() const { return side_; }
  const std::vector<Point>& demand_positions() const { return demand_pos_; }
  const std::vector<Point>& vehicle_positions() const { return vehicle_pos_; }

  int element_id(int demand, int vehicle) const {
    return demand * vehicles() + vehicle;
  }
  int demand_of(int id) const { return id / vehicles(); }
  int vehicle_of(int id) const { return id % vehicles(); }

  double mean_efficiency(int id) const { return mean_[id]; }
  double lower_bound(int id) const { return lower_[id]; }
  double upper_bound(int id) const { return upper_[id]; }
  double max_mean_efficiency() const { return max_mean_; }

  // One block per vehicle holding its N pairs, capacity 1 each.
  Matroid matroid() const;
  GroundSet ground_set() const;

 private:
  std::vector<Point> demand_pos_;
  std::vector<Point> vehicle_pos_;
  double side_;
  std::vector<double> mean_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  double max_mean_ = 0.0;
};

}  // namespace cvarsub

#endif  // CVARSUB_VEHICLE_ASSIGNMENT_H_
