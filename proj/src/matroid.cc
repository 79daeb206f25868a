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

#include "cvarsub/matroid.h"

#include <algorithm>
#include <cstdint>
#include <utility>

#include "cvarsub/errors.h"

namespace cvarsub {

GroundSet::GroundSet(int size, std::vector<std::string> labels)
    : size_(size), labels_(std::move(labels)) {
  if (size_ < 1) throw InputError("ground set must have at least one element");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != size_) {
    throw InputError("ground set labels must match ground size");
  }
}

std::string GroundSet::label(int id) const {
  if (!labels_.empty() && contains(id)) return labels_[id];
  return std::to_string(id);
}

Matroid::Matroid(int ground_size,
                 std::variant<UniformConstraint, PartitionConstraint> c)
    : ground_size_(ground_size),
      constraint_(std::move(c)),
      block_of_(ground_size, 0) {}

Matroid Matroid::Uniform(int ground_size, int capacity) {
  if (ground_size < 1) throw InputError("ground size must be >= 1");
  if (capacity < 1) throw InputError("uniform matroid needs capacity >= 1");
  return Matroid(ground_size, UniformConstraint{capacity});
}

Matroid Matroid::Partition(int ground_size,
                           std::vector<std::vector<int>> blocks,
                           std::vector<int> capacities) {
  if (ground_size < 1) throw InputError("ground size must be >= 1");
  if (blocks.empty()) throw InputError("partition matroid needs >= 1 block");
  if (blocks.size() != capacities.size()) {
    throw InputError("partition matroid needs one capacity per block");
  }
  std::vector<int> owner(ground_size, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (capacities[b] < 1) {
      throw InputError("partition capacities must be positive");
    }
    for (int id : blocks[b]) {
      if (id < 0 || id >= ground_size) {
        throw InputError("partition block names id " + std::to_string(id) +
                         " outside the ground set");
      }
      if (owner[id] != -1) {
        throw InputError("element " + std::to_string(id) +
                         " appears in more than one block");
      }
      owner[id] = static_cast<int>(b);
    }
  }
  for (int id = 0; id < ground_size; ++id) {
    if (owner[id] == -1) {
      throw InputError("element " + std::to_string(id) +
                       " is not covered by any partition block");
    }
  }
  for (auto& block : blocks) std::sort(block.begin(), block.end());
  Matroid m(ground_size,
            PartitionConstraint{std::move(blocks), std::move(capacities)});
  m.block_of_ = std::move(owner);
  return m;
}

int Matroid::block_of(int id) const {
  if (id < 0 || id >= ground_size_) {
    throw InputError("element id " + std::to_string(id) +
                     " outside the ground set");
  }
  return block_of_[id];
}

void Matroid::check_ids(const ElementSet& s) const {
  for (int id : s) {
    if (id < 0 || id >= ground_size_) {
      throw InputError("element id " + std::to_string(id) +
                       " outside the ground set");
    }
  }
}

bool Matroid::independent_unchecked(const ElementSet& s) const {
  if (const auto* u = std::get_if<UniformConstraint>(&constraint_)) {
    return static_cast<int>(s.size()) <= u->capacity;
  }
  const auto& p = std::get<PartitionConstraint>(constraint_);
  std::vector<int> used(p.blocks.size(), 0);
  for (int id : s) {
    if (++used[block_of_[id]] > p.capacities[block_of_[id]]) return false;
  }
  return true;
}

bool Matroid::is_independent(const ElementSet& s) const {
  check_ids(s);
  return independent_unchecked(s);
}

ElementSet Matroid::extension_candidates(const ElementSet& s) const {
  if (!is_independent(s)) {
    throw PreconditionError("extension_candidates needs an independent set");
  }
  std::vector<int> out;
  if (const auto* u = std::get_if<UniformConstraint>(&constraint_)) {
    if (static_cast<int>(s.size()) >= u->capacity) return ElementSet();
    for (int id = 0; id < ground_size_; ++id) {
      if (!s.contains(id)) out.push_back(id);
    }
    return ElementSet(std::move(out));
  }
  const auto& p = std::get<PartitionConstraint>(constraint_);
  std::vector<int> used(p.blocks.size(), 0);
  for (int id : s) ++used[block_of_[id]];
  for (int id = 0; id < ground_size_; ++id) {
    int b = block_of_[id];
    if (used[b] < p.capacities[b] && !s.contains(id)) out.push_back(id);
  }
  return ElementSet(std::move(out));
}

std::string Matroid::describe() const {
  if (const auto* u = std::get_if<UniformConstraint>(&constraint_)) {
    return "uniform(k=" + std::to_string(u->capacity) + ")";
  }
  const auto& p = std::get<PartitionConstraint>(constraint_);
  return "partition(" + std::to_string(p.blocks.size()) + " blocks)";
}

std::vector<ElementSet> enumerate_feasible(const Matroid& m, int cap) {
  const int n = m.ground_size();
  if (n > cap || n > 30) {
    throw CapExceededError("enumerate_feasible: ground size " +
                           std::to_string(n) + " exceeds cap " +
                           std::to_string(cap));
  }
  std::vector<ElementSet> out;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<int> ids;
    for (int i = 0; i < n; ++i) {
      if (mask & (std::uint32_t{1} << i)) ids.push_back(i);
    }
    ElementSet s(std::move(ids));
    if (m.is_independent(s)) out.push_back(std::move(s));
  }
  // Cardinality first, then lexicographic on the sorted id lists.
  std::stable_sort(out.begin(), out.end(),
                   [](const ElementSet& a, const ElementSet& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a < b;
                   });
  return out;
}

}  // namespace cvarsub
