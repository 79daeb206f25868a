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

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "cvarsub/element_set.h"
#include "cvarsub/errors.h"
#include "support/test_objectives.h"

namespace cvarsub {
namespace {

TEST(ElementSetTest, SortsAndDeduplicates) {
  ElementSet s{3, 1, 3, 2};
  EXPECT_EQ(s.ids(), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(s.to_string(), "{1,2,3}");
  EXPECT_TRUE(s.contains(2));
  EXPECT_EQ(s.without(2), (ElementSet{1, 3}));
  EXPECT_EQ(s.with(0).size(), 4u);
  EXPECT_TRUE((ElementSet{1, 3}).is_subset_of(s));
  EXPECT_FALSE((ElementSet{0}).is_subset_of(s));
  EXPECT_EQ(ElementSet{}.to_string(), "{}");
}

TEST(GroundSetTest, RejectsEmptyAndLabelMismatch) {
  EXPECT_THROW(GroundSet(0), InputError);
  EXPECT_THROW(GroundSet(2, {"a"}), InputError);
  GroundSet g(2, {"a", "b"});
  EXPECT_EQ(g.label(1), "b");
  EXPECT_EQ(GroundSet(3).label(2), "2");
}

TEST(MatroidTest, IsIndependentExamples) {
  EXPECT_TRUE(Matroid::Uniform(3, 1).is_independent({}));
  EXPECT_TRUE(
      Matroid::Partition(4, {{0, 1}, {2, 3}}, {1, 1}).is_independent({}));
  EXPECT_FALSE(Matroid::Uniform(3, 2).is_independent({0, 1, 2}));
  const Matroid p = Matroid::Partition(4, {{0, 1}, {2, 3}}, {1, 1});
  EXPECT_TRUE(p.is_independent({0, 2}));
  EXPECT_FALSE(p.is_independent({0, 1}));
}

TEST(MatroidTest, UnknownElementIsInputError) {
  EXPECT_THROW(Matroid::Uniform(3, 1).is_independent({3}), InputError);
  EXPECT_THROW(Matroid::Uniform(3, 1).is_independent({-1}), InputError);
}

TEST(MatroidTest, ConstructionValidation) {
  EXPECT_THROW(Matroid::Uniform(3, 0), InputError);
  EXPECT_THROW(Matroid::Uniform(0, 1), InputError);
  // Overlapping blocks.
  EXPECT_THROW(Matroid::Partition(3, {{0, 1}, {1, 2}}, {1, 1}), InputError);
  // Element 2 uncovered.
  EXPECT_THROW(Matroid::Partition(3, {{0, 1}}, {1}), InputError);
  EXPECT_THROW(Matroid::Partition(3, {{0, 1}, {2}}, {1}), InputError);
  EXPECT_THROW(Matroid::Partition(3, {{0, 1}, {2}}, {1, 0}), InputError);
  EXPECT_THROW(Matroid::Partition(3, {{0, 1}, {5}}, {1, 1}), InputError);
}

TEST(MatroidTest, ExtensionCandidatesExamples) {
  EXPECT_EQ(Matroid::Uniform(3, 1).extension_candidates({}),
            (ElementSet{0, 1, 2}));
  EXPECT_TRUE(Matroid::Uniform(3, 1).extension_candidates({0}).empty());
  EXPECT_EQ(
      Matroid::Partition(3, {{0, 1}, {2}}, {1, 1}).extension_candidates({0}),
      (ElementSet{2}));
}

TEST(MatroidTest, ExtensionOfDependentSetIsPreconditionError) {
  EXPECT_THROW(Matroid::Uniform(3, 1).extension_candidates({0, 1}),
               PreconditionError);
}

TEST(MatroidTest, EnumerateExamples) {
  EXPECT_EQ(enumerate_feasible(Matroid::Uniform(2, 1)),
            (std::vector<ElementSet>{{}, {0}, {1}}));
  EXPECT_EQ(enumerate_feasible(Matroid::Uniform(2, 2)),
            (std::vector<ElementSet>{{}, {0}, {1}, {0, 1}}));
  EXPECT_EQ(enumerate_feasible(Matroid::Partition(3, {{0, 1}, {2}}, {1, 1})),
            (std::vector<ElementSet>{{}, {0}, {1}, {2}, {0, 2}, {1, 2}}));
}

TEST(MatroidTest, EnumerateRefusesAboveCap) {
  EXPECT_THROW(enumerate_feasible(Matroid::Uniform(17, 2)), CapExceededError);
  EXPECT_NO_THROW(enumerate_feasible(Matroid::Uniform(17, 1), 17));
  EXPECT_THROW(enumerate_feasible(Matroid::Uniform(4, 2), 3), CapExceededError);
}

std::vector<ElementSet> all_subsets(int n) {
  std::vector<ElementSet> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    ElementSet s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) s.insert(i);
    }
    out.push_back(s);
  }
  return out;
}

class RandomMatroidTest : public ::testing::TestWithParam<int> {
 protected:
  Matroid matroid() const {
    const int seed = GetParam();
    return testing::random_matroid(seed, 1 + seed % 8, seed % 2 == 0);
  }
};

TEST_P(RandomMatroidTest, EnumerationMatchesFilter) {
  const Matroid m = matroid();
  std::vector<ElementSet> expected;
  for (const ElementSet& s : all_subsets(m.ground_size())) {
    if (m.is_independent(s)) expected.push_back(s);
  }
  std::vector<ElementSet> got = enumerate_feasible(m);
  std::sort(got.begin(), got.end());
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(got, expected);
}

TEST_P(RandomMatroidTest, DownwardClosed) {
  const Matroid m = matroid();
  for (const ElementSet& s : enumerate_feasible(m)) {
    for (const ElementSet& p : all_subsets(m.ground_size())) {
      if (p.is_subset_of(s)) {
        EXPECT_TRUE(m.is_independent(p)) << p.to_string();
      }
    }
  }
}

TEST_P(RandomMatroidTest, ExchangeProperty) {
  const Matroid m = matroid();
  const std::vector<ElementSet> feasible = enumerate_feasible(m);
  for (const ElementSet& p : feasible) {
    for (const ElementSet& s : feasible) {
      if (p.size() >= s.size()) continue;
      bool found = false;
      for (int x : s) {
        if (!p.contains(x) && m.is_independent(p.with(x))) found = true;
      }
      EXPECT_TRUE(found) << p.to_string() << " vs " << s.to_string();
    }
  }
}

TEST_P(RandomMatroidTest, ExtensionCandidatesMatchFilter) {
  const Matroid m = matroid();
  for (const ElementSet& s : enumerate_feasible(m)) {
    ElementSet expected;
    for (int x = 0; x < m.ground_size(); ++x) {
      if (!s.contains(x) && m.is_independent(s.with(x))) expected.insert(x);
    }
    EXPECT_EQ(m.extension_candidates(s), expected);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomMatroidTest, ::testing::Range(0, 24));

}  // namespace
}  // namespace cvarsub
