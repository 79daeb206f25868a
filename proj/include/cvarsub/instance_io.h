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

#ifndef CVARSUB_INSTANCE_IO_H_
#define CVARSUB_INSTANCE_IO_H_

#include <cstdint>
#include <memory>
#include <string>

#include "cvarsub/matroid.h"
#include "cvarsub/objective.h"
#include "cvarsub/sensor_coverage.h"
#include "cvarsub/vehicle_assignment.h"
#include "json.hpp"

namespace cvarsub {

// A problem instance as stored on disk: the objective, its matroid and the
// seed the instance was generated from. Scenarios are never stored; they
// are redrawn from seeds.
struct Instance {
  std::string problem;  // "vehicle" or "sensor"
  std::uint64_t seed = 0;
  std::shared_ptr<const StochasticObjective> objective;
  Matroid matroid;
  GroundSet ground;
};

Instance make_vehicle_instance(const VehicleAssignmentParams& params);
Instance make_sensor_instance(const OccupancyGrid& grid,
                              const SensorCoverageParams& params);

// {"type": "uniform", "k": k} or
// {"type": "partition", "blocks": [[ids]...], "capacities": [k_i...]}
nlohmann::json matroid_to_json(const Matroid& m);
Matroid matroid_from_json(const nlohmann::json& j, int ground_size);

// Top level: problem, seed, ground_size, matroid, gamma_hint, plus a
// "vehicle" or "sensor" object. A vehicle instance without stored positions
// is regenerated from its seed. A sensor instance carries either a grid
// (rows of 0/1) with optional candidate cells, or explicit coverage_sets with
// an optional free_cells count (default: size of their union).
nlohmann::json instance_to_json(const Instance& inst);
// Throws InputError on malformed documents.
Instance instance_from_json(const nlohmann::json& j);

Instance load_instance(const std::string& path);

}  // namespace cvarsub

#endif  // CVARSUB_INSTANCE_IO_H_
