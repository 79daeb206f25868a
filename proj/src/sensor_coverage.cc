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

#include "cvarsub/sensor_coverage.h"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <utility>

#include "cvarsub/errors.h"
#include "cvarsub/rng.h"

namespace cvarsub {

OccupancyGrid::OccupancyGrid(int rows, int cols,
                             std::vector<std::uint8_t> blocked)
    : rows_(rows), cols_(cols), blocked_(std::move(blocked)) {
  if (rows_ < 1 || cols_ < 1) throw InputError("grid must be at least 1x1");
  if (static_cast<int>(blocked_.size()) != rows_ * cols_) {
    throw InputError("grid cell count does not match rows * cols");
  }
}

OccupancyGrid OccupancyGrid::Parse(std::string_view text) {
  std::vector<std::uint8_t> cells;
  int rows = 0;
  int cols = -1;
  while (!text.empty()) {
    std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view()
                                         : text.substr(eol + 1);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.remove_suffix(1);
    }
    if (line.empty() || line.front() == ';') continue;
    if (cols == -1) cols = static_cast<int>(line.size());
    if (static_cast<int>(line.size()) != cols) {
      throw InputError("grid row " + std::to_string(rows) +
                       " has a different width");
    }
    for (char c : line) {
      if (c == '0' || c == '.') {
        cells.push_back(0);
      } else if (c == '1' || c == '#') {
        cells.push_back(1);
      } else {
        throw InputError(std::string("unexpected grid character '") + c + "'");
      }
    }
    ++rows;
  }
  if (rows == 0) throw InputError("grid is empty");
  return OccupancyGrid(rows, cols, std::move(cells));
}

OccupancyGrid OccupancyGrid::RandomCampus(int rows, int cols, int buildings,
                                          std::uint64_t seed) {
  if (rows < 1 || cols < 1) throw InputError("grid must be at least 1x1");
  std::vector<std::uint8_t> cells(static_cast<std::size_t>(rows) * cols, 0);
  KeyedRng rng(seed, Stream::kGrid);
  for (int b = 0; b < buildings; ++b) {
    int h = 1 + static_cast<int>(rng.below(std::max(1, rows / 4)));
    int w = 1 + static_cast<int>(rng.below(std::max(1, cols / 4)));
    int r0 = static_cast<int>(rng.below(rows));
    int c0 = static_cast<int>(rng.below(cols));
    for (int r = r0; r < std::min(rows, r0 + h); ++r) {
      for (int c = c0; c < std::min(cols, c0 + w); ++c) {
        cells[static_cast<std::size_t>(r) * cols + c] = 1;
      }
    }
  }
  return OccupancyGrid(rows, cols, std::move(cells));
}

int OccupancyGrid::free_count() const {
  return static_cast<int>(std::count(blocked_.begin(), blocked_.end(), 0));
}

std::vector<int> OccupancyGrid::free_cells() const {
  std::vector<int> out;
  for (int id = 0; id < rows_ * cols_; ++id) {
    if (blocked_[id] == 0) out.push_back(id);
  }
  return out;
}

std::vector<std::string> OccupancyGrid::to_rows() const {
  std::vector<std::string> out;
  for (int r = 0; r < rows_; ++r) {
    std::string row;
    for (int c = 0; c < cols_; ++c) row += is_free(r, c) ? '0' : '1';
    out.push_back(std::move(row));
  }
  return out;
}

namespace {

// Walks the cells entered by the segment between two cell centers, in
// integer arithmetic. err tracks which cell boundary the segment meets
// next; err == 0 is an exact corner crossing and steps diagonally.
bool line_of_sight(const OccupancyGrid& grid, int r0, int c0, int r1, int c1) {
  int dx = std::abs(c1 - c0);
  int dy = std::abs(r1 - r0);
  const int sx = c1 > c0 ? 1 : -1;
  const int sy = r1 > r0 ? 1 : -1;
  int x = c0;
  int y = r0;
  int steps = 1 + dx + dy;
  int err = dx - dy;
  dx *= 2;
  dy *= 2;
  for (; steps > 0; --steps) {
    if (!grid.is_free(y, x)) return false;
    if (err > 0) {
      x += sx;
      err -= dy;
    } else if (err < 0) {
      y += sy;
      err += dx;
    } else {
      x += sx;
      y += sy;
      err += dx - dy;
      --steps;
    }
  }
  return true;
}

}  // namespace

std::vector<int> visible_cells(const OccupancyGrid& grid, int cell) {
  if (cell < 0 || cell >= grid.rows() * grid.cols()) {
    throw InputError("visible_cells: cell outside the grid");
  }
  if (!grid.is_free(cell)) {
    throw InputError("visible_cells: sensor cell is an obstacle");
  }
  const int r0 = cell / grid.cols();
  const int c0 = cell % grid.cols();
  std::vector<int> out;
  for (int r = 0; r < grid.rows(); ++r) {
    for (int c = 0; c < grid.cols(); ++c) {
      if (grid.is_free(r, c) && line_of_sight(grid, r0, c0, r, c)) {
        out.push_back(grid.cell_id(r, c));
      }
    }
  }
  return out;
}

SensorCoverageObjective SensorCoverageObjective::Generate(
    const OccupancyGrid& grid, const SensorCoverageParams& p) {
  if (p.select < 1 || p.candidates < p.select) {
    throw InputError("sensor instance needs N >= M >= 1");
  }
  std::vector<int> free = grid.free_cells();
  if (free.empty()) throw InputError("sensor grid has no free cells");
  if (static_cast<int>(free.size()) < p.candidates) {
    throw InputError("sensor grid has fewer free cells than candidates");
  }
  // Partial Fisher-Yates over the free cells.
  KeyedRng rng(p.seed, Stream::kPlacement);
  std::vector<int> cells;
  for (int i = 0; i < p.candidates; ++i) {
    auto j = i + static_cast<int>(rng.below(free.size() - i));
    std::swap(free[i], free[j]);
    cells.push_back(free[i]);
  }
  std::vector<std::vector<int>> coverage;
  for (int cell : cells) coverage.push_back(visible_cells(grid, cell));
  return SensorCoverageObjective(std::move(coverage), grid.free_count(),
                                 p.select, std::move(cells));
}

SensorCoverageObjective::SensorCoverageObjective(
    std::vector<std::vector<int>> coverage_sets, int free_cells, int select,
    std::vector<int> candidate_cells)
    : coverage_(std::move(coverage_sets)),
      free_cells_(free_cells),
      select_(select),
      candidate_cells_(std::move(candidate_cells)) {
  if (coverage_.empty()) throw InputError("sensor instance needs N >= 1");
  if (select_ < 1 || select_ > ground_size()) {
    throw InputError("sensor instance needs N >= M >= 1");
  }
  if (free_cells_ < 1) throw InputError("sensor instance has no free cells");
  if (!candidate_cells_.empty() &&
      candidate_cells_.size() != coverage_.size()) {
    throw InputError("one candidate cell per coverage set expected");
  }
  std::vector<int> universe;
  for (auto& set : coverage_) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (!set.empty() && set.front() < 0) {
      throw InputError("coverage cell ids must be nonnegative");
    }
    if (static_cast<int>(set.size()) > free_cells_) {
      throw InputError("a coverage set is larger than the free space");
    }
    universe.insert(universe.end(), set.begin(), set.end());
  }
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());

  words_ = std::max<int>(1, (static_cast<int>(universe.size()) + 63) / 64);
  bits_.assign(static_cast<std::size_t>(words_) * coverage_.size(), 0);
  success_.resize(coverage_.size());
  for (std::size_t i = 0; i < coverage_.size(); ++i) {
    for (int cell : coverage_[i]) {
      auto k = std::lower_bound(universe.begin(), universe.end(), cell) -
               universe.begin();
      bits_[i * words_ + k / 64] |= std::uint64_t{1} << (k % 64);
    }
    success_[i] = 1.0 - static_cast<double>(coverage_[i].size()) /
                            static_cast<double>(free_cells_);
  }
}

double SensorCoverageObjective::evaluate(const ElementSet& s,
                                         const Scenario& sc) const {
  check_ids(s);
  if (static_cast<int>(sc.payload.size()) != ground_size()) {
    throw InputError("sensor scenario payload has the wrong size");
  }
  std::vector<std::uint64_t> acc(words_, 0);
  for (int i : s) {
    if (sc.payload[i] == 0.0) continue;
    const std::uint64_t* row = &bits_[static_cast<std::size_t>(i) * words_];
    for (int w = 0; w < words_; ++w) acc[w] |= row[w];
  }
  int covered = 0;
  for (std::uint64_t w : acc) covered += std::popcount(w);
  return covered;
}

Scenario SensorCoverageObjective::draw_scenario(std::uint64_t seed,
                                                int index) const {
  KeyedRng rng(seed, Stream::kScenario, static_cast<std::uint64_t>(index));
  Scenario sc;
  sc.index = index;
  sc.payload.resize(coverage_.size());
  for (std::size_t i = 0; i < coverage_.size(); ++i) {
    sc.payload[i] = rng.bernoulli(success_[i]) ? 1.0 : 0.0;
  }
  return sc;
}

GroundSet SensorCoverageObjective::ground_set() const {
  std::vector<std::string> labels;
  for (int i = 0; i < ground_size(); ++i) {
    labels.push_back(candidate_cells_.empty()
                         ? "s" + std::to_string(i)
                         : "s" + std::to_string(i) + "@" +
                               std::to_string(candidate_cells_[i]));
  }
  return GroundSet(ground_size(), std::move(labels));
}

}  // namespace cvarsub
