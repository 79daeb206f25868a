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

#ifndef CVARSUB_SENSOR_COVERAGE_H_
#define CVARSUB_SENSOR_COVERAGE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cvarsub/matroid.h"
#include "cvarsub/objective.h"

namespace cvarsub {

// Row-major occupancy grid; cell id = row * cols + col.
class OccupancyGrid {
 public:
  OccupancyGrid(int rows, int cols, std::vector<std::uint8_t> blocked);

  // One row per line; '1' or '#' is an obstacle, '0' or '.' is free. Blank
  // lines and lines starting with ';' are skipped.
  static OccupancyGrid Parse(std::string_view text);
  // Axis-aligned rectangular "buildings" dropped on an empty map.
  static OccupancyGrid RandomCampus(int rows, int cols, int buildings,
                                    std::uint64_t seed);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int cell_id(int row, int col) const { return row * cols_ + col; }
  bool is_free(int row, int col) const {
    return blocked_[cell_id(row, col)] == 0;
  }
  bool is_free(int cell) const { return blocked_[cell] == 0; }
  int free_count() const;
  std::vector<int> free_cells() const;
  // Inverse of Parse, using '0' / '1'.
  std::vector<std::string> to_rows() const;

 private:
  int rows_;
  int cols_;
  std::vector<std::uint8_t> blocked_;
};

// Free cells whose center is joined to the center of `cell` by a segment
// that enters no obstacle cell. A segment passing exactly through a shared
// corner does not enter the two side cells. Includes `cell` itself.
std::vector<int> visible_cells(const OccupancyGrid& grid, int cell);

struct SensorCoverageParams {
  int candidates = 8;
  int select = 4;
  std::uint64_t seed = 0;
};

// Sensor selection with failures. Candidate i covers the cell set v_i and
// works with probability p_i = 1 - |v_i| / v_free, otherwise covers
// nothing. Utility is the number of cells in the union of the coverage of
// the selected sensors that work. Scenario payload: one 0/1 success flag per
// candidate.
class SensorCoverageObjective : public StochasticObjective {
 public:
  // Places `candidates` sensors on distinct free cells and computes their
  // coverage by grid visibility. Throws InputError when the grid has fewer
  // free cells than candidates or M > N.
  static SensorCoverageObjective Generate(const OccupancyGrid& grid,
                                          const SensorCoverageParams& p);

  // Coverage sets given directly as cell ids. `free_cells` is v_free and
  // must be at least the size of every coverage set.
  SensorCoverageObjective(std::vector<std::vector<int>> coverage_sets,
                          int free_cells, int select,
                          std::vector<int> candidate_cells = {});

  int ground_size() const override {
    return static_cast<int>(coverage_.size());
  }
  double evaluate(const ElementSet& s, const Scenario& sc) const override;
  Scenario draw_scenario(std::uint64_t seed, int index) const override;
  // v_free.
  double gamma_hint() const override { return free_cells_; }
  std::string name() const override { return "sensor"; }

  int free_cells() const { return free_cells_; }
  int select() const { return select_; }
  const std::vector<int>& coverage_set(int i) const { return coverage_[i]; }
  int coverage_size(int i) const {
    return static_cast<int>(coverage_[i].size());
  }
  double success_probability(int i) const { return success_[i]; }
  // Grid cell of each candidate; empty for explicit coverage sets.
  const std::vector<int>& candidate_cells() const { return candidate_cells_; }

  Matroid matroid() const { return Matroid::Uniform(ground_size(), select_); }
  GroundSet ground_set() const;

 private:
  std::vector<std::vector<int>> coverage_;
  int free_cells_;
  int select_;
  std::vector<int> candidate_cells_;
  std::vector<double> success_;
  // Coverage as bitsets over the compressed universe of covered cells.
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

}  // namespace cvarsub

#endif  // CVARSUB_SENSOR_COVERAGE_H_
