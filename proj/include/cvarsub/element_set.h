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

#ifndef CVARSUB_ELEMENT_SET_H_
#define CVARSUB_ELEMENT_SET_H_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace cvarsub {

// A finite set of dense element ids, kept sorted ascending. Iteration order
// is therefore deterministic, which the greedy tie-break relies on.
class ElementSet {
 public:
  using const_iterator = std::vector<int>::const_iterator;

  ElementSet() = default;
  ElementSet(std::initializer_list<int> ids);
  explicit ElementSet(std::vector<int> ids);

  bool contains(int id) const;
  void insert(int id);
  void erase(int id);

  ElementSet with(int id) const;
  ElementSet without(int id) const;

  bool is_subset_of(const ElementSet& other) const;

  std::size_t size() const { return ids_.size(); }
  bool empty() const { return ids_.empty(); }
  const_iterator begin() const { return ids_.begin(); }
  const_iterator end() const { return ids_.end(); }
  const std::vector<int>& ids() const { return ids_; }

  // "{0,2,5}"
  std::string to_string() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet& a, const ElementSet& b) {
    return a.ids_ <=> b.ids_;
  }

 private:
  std::vector<int> ids_;
};

}  // namespace cvarsub

#endif  // CVARSUB_ELEMENT_SET_H_
