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

#include "cvarsub/element_set.h"

#include <algorithm>
#include <utility>

namespace cvarsub {

ElementSet::ElementSet(std::initializer_list<int> ids)
    : ElementSet(std::vector<int>(ids)) {}

ElementSet::ElementSet(std::vector<int> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool ElementSet::contains(int id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

void ElementSet::insert(int id) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) ids_.insert(it, id);
}

void ElementSet::erase(int id) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it != ids_.end() && *it == id) ids_.erase(it);
}

ElementSet ElementSet::with(int id) const {
  ElementSet out = *this;
  out.insert(id);
  return out;
}

ElementSet ElementSet::without(int id) const {
  ElementSet out = *this;
  out.erase(id);
  return out;
}

bool ElementSet::is_subset_of(const ElementSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                       ids_.end());
}

std::string ElementSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(ids_[i]);
  }
  out += '}';
  return out;
}

}  // namespace cvarsub
