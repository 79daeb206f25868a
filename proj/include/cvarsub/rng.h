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

#ifndef CVARSUB_RNG_H_
#define CVARSUB_RNG_H_

#include <cstdint>
#include <random>

namespace cvarsub {

// Named substreams so that, e.g., instance geometry and scenario draws from
// the same user seed never share a generator state.
enum class Stream : std::uint64_t {
  kGeometry = 1,
  kScenario = 2,
  kPlacement = 3,
  kGrid = 4,
  kEvaluation = 5,
  kFreshTau = 6,
};

// mt19937_64 keyed by (seed, stream, index) through std::seed_seq. Both are
// fully specified by the standard, and the real-valued draws below avoid
// the implementation-defined std:: distributions, so a given key produces
// the same numbers on every conforming toolchain.
class KeyedRng {
 public:
  KeyedRng(std::uint64_t seed, Stream stream, std::uint64_t index = 0);

  std::uint64_t next() { return engine_(); }
  // Uniform on the open interval (0, 1) with 53-bit resolution.
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  bool bernoulli(double p) { return uniform() < p; }
  // Uniform integer in [0, n), rejection-sampled, n >= 1.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

// Mixes two 64-bit values into one (splitmix64 finalizer on a ^ rotated b).
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

}  // namespace cvarsub

#endif  // CVARSUB_RNG_H_
