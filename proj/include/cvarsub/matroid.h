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

#ifndef CVARSUB_MATROID_H_
#define CVARSUB_MATROID_H_

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "cvarsub/element_set.h"

namespace cvarsub {

inline constexpr int kDefaultEnumerationCap = 16;

// Ground set X = {0, ..., size-1}. Labels are display metadata only.
class GroundSet {
 public:
  explicit GroundSet(int size, std::vector<std::string> labels = {});

  int size() const { return size_; }
  bool contains(int id) const { return id >= 0 && id < size_; }
  // Falls back to the decimal id when no label was supplied.
  std::string label(int id) const;
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  int size_;
  std::vector<std::string> labels_;
};

struct UniformConstraint {
  int capacity;
};

struct PartitionConstraint {
  std::vector<std::vector<int>> blocks;
  std::vector<int> capacities;
};

// Uniform or partition matroid over a ground set of known size. Immutable
// once built; the factories validate every structural invariant.
class Matroid {
 public:
  static Matroid Uniform(int ground_size, int capacity);
  static Matroid Partition(int ground_size,
                           std::vector<std::vector<int>> blocks,
                           std::vector<int> capacities);

  int ground_size() const { return ground_size_; }
  bool is_uniform() const {
    return std::holds_alternative<UniformConstraint>(constraint_);
  }
  const std::variant<UniformConstraint, PartitionConstraint>& constraint()
      const {
    return constraint_;
  }
  // Block index of an element; 0 for every element of a uniform matroid.
  int block_of(int id) const;

  // Throws InputError when S names an id outside the ground set.
  bool is_independent(const ElementSet& s) const;

  // { x in X \ S : S + x independent }, ascending. Throws PreconditionError
  // when S itself is dependent.
  ElementSet extension_candidates(const ElementSet& s) const;

  std::string describe() const;

 private:
  Matroid(int ground_size,
          std::variant<UniformConstraint, PartitionConstraint> c);

  void check_ids(const ElementSet& s) const;
  bool independent_unchecked(const ElementSet& s) const;

  int ground_size_;
  std::variant<UniformConstraint, PartitionConstraint> constraint_;
  std::vector<int> block_of_;
};

// Every independent subset of the ground set, including the empty set, in
// order of increasing cardinality and then lexicographically. Refuses with
// CapExceededError when ground_size exceeds `cap`.
std::vector<ElementSet> enumerate_feasible(const Matroid& m,
                                           int cap = kDefaultEnumerationCap);

}  // namespace cvarsub

#endif  // CVARSUB_MATROID_H_
