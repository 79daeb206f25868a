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

#include "cvarsub/instance_io.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>
#include <variant>

#include "cvarsub/errors.h"

namespace cvarsub {

using nlohmann::json;

Instance make_vehicle_instance(const VehicleAssignmentParams& params) {
  auto obj = std::make_shared<const VehicleAssignmentObjective>(
      VehicleAssignmentObjective::Generate(params));
  return Instance{"vehicle", params.seed, obj, obj->matroid(),
                  obj->ground_set()};
}

Instance make_sensor_instance(const OccupancyGrid& grid,
                              const SensorCoverageParams& params) {
  auto obj = std::make_shared<const SensorCoverageObjective>(
      SensorCoverageObjective::Generate(grid, params));
  return Instance{"sensor", params.seed, obj, obj->matroid(),
                  obj->ground_set()};
}

json matroid_to_json(const Matroid& m) {
  if (const auto* u = std::get_if<UniformConstraint>(&m.constraint())) {
    return json{{"type", "uniform"}, {"k", u->capacity}};
  }
  const auto& p = std::get<PartitionConstraint>(m.constraint());
  return json{{"type", "partition"},
              {"blocks", p.blocks},
              {"capacities", p.capacities}};
}

Matroid matroid_from_json(const json& j, int ground_size) {
  try {
    const std::string type = j.at("type").get<std::string>();
    if (type == "uniform") {
      return Matroid::Uniform(ground_size, j.at("k").get<int>());
    }
    if (type == "partition") {
      return Matroid::Partition(
          ground_size, j.at("blocks").get<std::vector<std::vector<int>>>(),
          j.at("capacities").get<std::vector<int>>());
    }
    throw InputError("unknown matroid type '" + type + "'");
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed matroid: ") + e.what());
  }
}

namespace {

json points_to_json(const std::vector<Point>& pts) {
  json out = json::array();
  for (const Point& p : pts) out.push_back({p.x, p.y});
  return out;
}

std::vector<Point> points_from_json(const json& j) {
  std::vector<Point> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 2) {
      throw InputError("positions must be [x, y] pairs");
    }
    out.push_back(Point{p[0].get<double>(), p[1].get<double>()});
  }
  return out;
}

OccupancyGrid grid_from_json(const json& j) {
  std::string text;
  for (const auto& row : j) {
    if (row.is_string()) {
      text += row.get<std::string>();
    } else {
      for (const auto& cell : row) text += cell.get<int>() != 0 ? '1' : '0';
    }
    text += '\n';
  }
  return OccupancyGrid::Parse(text);
}

json vehicle_payload(const VehicleAssignmentObjective& v) {
  return json{{"vehicles", v.vehicles()},
              {"demands", v.demands()},
              {"side", v.side()},
              {"demand_positions", points_to_json(v.demand_positions())},
              {"vehicle_positions", points_to_json(v.vehicle_positions())}};
}

std::shared_ptr<const StochasticObjective> vehicle_from_json(
    const json& v, std::uint64_t seed) {
  if (v.contains("demand_positions") && v.contains("vehicle_positions")) {
    return std::make_shared<const VehicleAssignmentObjective>(
        points_from_json(v.at("demand_positions")),
        points_from_json(v.at("vehicle_positions")), v.value("side", 10.0));
  }
  VehicleAssignmentParams p;
  p.vehicles = v.at("vehicles").get<int>();
  p.demands = v.at("demands").get<int>();
  p.side = v.value("side", 10.0);
  p.seed = seed;
  return std::make_shared<const VehicleAssignmentObjective>(
      VehicleAssignmentObjective::Generate(p));
}

std::shared_ptr<const StochasticObjective> sensor_from_json(const json& s,
                                                            std::uint64_t seed,
                                                            int select) {
  if (s.contains("coverage_sets")) {
    auto sets = s.at("coverage_sets").get<std::vector<std::vector<int>>>();
    int free_cells = 0;
    if (s.contains("free_cells")) {
      free_cells = s.at("free_cells").get<int>();
    } else {
      std::vector<int> all;
      for (const auto& c : sets) all.insert(all.end(), c.begin(), c.end());
      std::sort(all.begin(), all.end());
      free_cells =
          static_cast<int>(std::unique(all.begin(), all.end()) - all.begin());
    }
    auto cells = s.value("candidate_cells", std::vector<int>{});
    return std::make_shared<const SensorCoverageObjective>(
        std::move(sets), free_cells, select, std::move(cells));
  }
  if (!s.contains("grid")) {
    throw InputError("sensor instance needs a grid or coverage_sets");
  }
  const OccupancyGrid grid = grid_from_json(s.at("grid"));
  if (s.contains("candidate_cells")) {
    auto cells = s.at("candidate_cells").get<std::vector<int>>();
    std::vector<std::vector<int>> coverage;
    for (int c : cells) coverage.push_back(visible_cells(grid, c));
    return std::make_shared<const SensorCoverageObjective>(
        std::move(coverage), grid.free_count(), select, std::move(cells));
  }
  SensorCoverageParams p;
  p.candidates = s.at("candidates").get<int>();
  p.select = select;
  p.seed = seed;
  return std::make_shared<const SensorCoverageObjective>(
      SensorCoverageObjective::Generate(grid, p));
}

}  // namespace

json instance_to_json(const Instance& inst) {
  json j{{"problem", inst.problem},
         {"seed", inst.seed},
         {"ground_size", inst.matroid.ground_size()},
         {"matroid", matroid_to_json(inst.matroid)},
         {"gamma_hint", inst.objective->gamma_hint()}};
  if (const auto* v = dynamic_cast<const VehicleAssignmentObjective*>(
          inst.objective.get())) {
    j["vehicle"] = vehicle_payload(*v);
  } else if (const auto* s = dynamic_cast<const SensorCoverageObjective*>(
                 inst.objective.get())) {
    json payload{{"candidates", s->ground_size()},
                 {"select", s->select()},
                 {"free_cells", s->free_cells()}};
    std::vector<std::vector<int>> sets;
    std::vector<double> probs;
    for (int i = 0; i < s->ground_size(); ++i) {
      sets.push_back(s->coverage_set(i));
      probs.push_back(s->success_probability(i));
    }
    if (!s->candidate_cells().empty()) {
      payload["candidate_cells"] = s->candidate_cells();
    }
    payload["coverage_sets"] = sets;
    payload["success_probabilities"] = probs;
    j["sensor"] = std::move(payload);
  } else {
    throw InputError("instance_to_json: unsupported objective " +
                     inst.objective->name());
  }
  return j;
}

Instance instance_from_json(const json& j) {
  try {
    const std::string problem = j.at("problem").get<std::string>();
    const std::uint64_t seed = j.value("seed", std::uint64_t{0});
    std::shared_ptr<const StochasticObjective> obj;
    if (problem == "vehicle") {
      obj = vehicle_from_json(j.at("vehicle"), seed);
    } else if (problem == "sensor") {
      const json& s = j.at("sensor");
      int select = s.value("select", 0);
      if (select == 0 && j.contains("matroid")) {
        select = j.at("matroid").value("k", 0);
      }
      obj = sensor_from_json(s, seed, select);
    } else {
      throw InputError("unknown problem type '" + problem + "'");
    }
    const int n = obj->ground_size();
    if (j.contains("ground_size") && j.at("ground_size").get<int>() != n) {
      throw InputError("ground_size does not match the problem payload");
    }
    Matroid m = [&] {
      if (j.contains("matroid")) return matroid_from_json(j.at("matroid"), n);
      if (const auto* v =
              dynamic_cast<const VehicleAssignmentObjective*>(obj.get())) {
        return v->matroid();
      }
      return dynamic_cast<const SensorCoverageObjective&>(*obj).matroid();
    }();
    GroundSet ground = [&] {
      if (const auto* v =
              dynamic_cast<const VehicleAssignmentObjective*>(obj.get())) {
        return v->ground_set();
      }
      return dynamic_cast<const SensorCoverageObjective&>(*obj).ground_set();
    }();
    return Instance{problem, seed, std::move(obj), std::move(m),
                    std::move(ground)};
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed instance: ") + e.what());
  }
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("instance file " + path + " is not JSON: " + e.what());
  }
  return instance_from_json(j);
}

}  // namespace cvarsub
