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

#ifndef CVARSUB_ERRORS_H_
#define CVARSUB_ERRORS_H_

#include <stdexcept>
#include <string>

namespace cvarsub {

// Malformed or out-of-range caller input (unknown element id, n_s = 0, ...).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called in a state its contract excludes.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Exhaustive enumeration refused because the ground set is above the cap.
class CapExceededError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Curvature needs f({s}) > 0 for every element considered.
class UndefinedCurvatureError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace cvarsub

#endif  // CVARSUB_ERRORS_H_
