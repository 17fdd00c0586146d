// Copyright 2026 The naive-a Authors
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

#include "naive_a/space.hpp"

#include <gtest/gtest.h>

#include "naive_a/errors.hpp"
#include "naive_a/generators.hpp"
#include "test_support.hpp"

namespace naive_a {
namespace {

using testing::points;

TEST(SpaceTest, TwoPointMatrix) {
  Space s = Space::from_matrix({"b", "a"}, {{0, 1}, {1, 0}});
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.id(0), "a");
  EXPECT_EQ(s.distance(0, 1), Dist(1));
}

TEST(SpaceTest, MatrixRowsFollowGivenIdOrder) {
  Space s = Space::from_matrix({"c", "a", "b"},
                               {{0, 2, 3}, {2, 0, 4}, {3, 4, 0}});
  EXPECT_EQ(s.distance(s.index_of("a"), s.index_of("c")), Dist(2));
  EXPECT_EQ(s.distance(s.index_of("b"), s.index_of("c")), Dist(3));
  EXPECT_EQ(s.distance(s.index_of("a"), s.index_of("b")), Dist(4));
}

TEST(SpaceTest, PathGraphShortestPaths) {
  Space s = Space::from_graph({"p0", "p1", "p2"},
                              {{"p0", "p1", 1}, {"p1", "p2", 1}});
  EXPECT_EQ(s.distance(s.index_of("p0"), s.index_of("p2")), Dist(2));
}

TEST(SpaceTest, GraphUsesCheapestRoute) {
  Space s = Space::from_graph(
      {"a", "b", "c"},
      {{"a", "b", Rational(1, 2)}, {"b", "c", Rational(1, 3)}, {"a", "c", 1}});
  EXPECT_EQ(s.distance(s.index_of("a"), s.index_of("c")), Rational(5, 6));
}

TEST(SpaceTest, RejectsTriangleViolation) {
  EXPECT_THROW(Space::from_matrix({"a", "b", "c"},
                                  {{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}),
               MetricAxiomError);
}

TEST(SpaceTest, RejectsAsymmetryZeroDistanceAndBadShape) {
  EXPECT_THROW(Space::from_matrix({"a", "b"}, {{0, 1}, {2, 0}}),
               MetricAxiomError);
  EXPECT_THROW(Space::from_matrix({"a", "b"}, {{0, 0}, {0, 0}}),
               MetricAxiomError);
  EXPECT_THROW(Space::from_matrix({"a", "b"}, {{0, 1}}), MalformedInput);
  EXPECT_THROW(Space::from_matrix({"a", "a"}, {{0, 1}, {1, 0}}),
               MalformedInput);
  EXPECT_THROW(Space::from_matrix({}, {}), MalformedInput);
}

TEST(SpaceTest, RejectsDisconnectedOrNonPositiveGraphs) {
  EXPECT_THROW(Space::from_graph({"a", "b", "c"}, {{"a", "b", 1}}),
               MalformedInput);
  EXPECT_THROW(Space::from_graph({"a", "b"}, {{"a", "b", 0}}), MalformedInput);
  EXPECT_THROW(Space::from_graph({"a", "b"}, {{"a", "z", 1}}), UnknownPoint);
}

TEST(SpaceTest, UnknownPointIsReported) {
  Space s = line_space(10);
  EXPECT_THROW(s.index_of("p10"), UnknownPoint);
  EXPECT_FALSE(s.find("x").has_value());
}

TEST(SpaceTest, Balls) {
  Space s = line_space(10);
  EXPECT_EQ(ball(s, s.index_of("p3"), 2),
            points(s, {"p1", "p2", "p3", "p4", "p5"}));
  EXPECT_EQ(ball(s, s.index_of("p7"), 0), points(s, {"p7"}));
  EXPECT_EQ(ball(s, s.index_of("p0"), 100).size(), 10u);
}

TEST(SpaceTest, GrowthProfile) {
  Space s = line_space(10);
  EXPECT_EQ(growth_profile(s, 1), 3u);
  EXPECT_EQ(growth_profile(s, 0), 1u);
  EXPECT_EQ(growth_profile(s, 9), 10u);
}

TEST(SpaceTest, HintsMustNameKnownPoints) {
  Space s = line_space(4);
  EXPECT_THROW(s.set_hints({{"p0", {"p0", "p9"}}}), UnknownPoint);
  EXPECT_THROW(s.set_hints({{"p0", {}}}), MalformedInput);
  s.set_hints({{"p1", {"p0", "p1"}}});
  EXPECT_EQ(s.hints().size(), 1u);
}

TEST(SpaceTest, GeneratedMetricsSatisfyAxioms) {
  validate_metric(line_space(12));
  validate_metric(grid_space(4, 3));
  std::vector<std::int64_t> lengths{3, 1, 4};
  validate_metric(path_union_space(lengths, 7));
  std::vector<std::int64_t> gens{2, 3};
  validate_metric(cyclic_space(11, gens));
}

}  // namespace
}  // namespace naive_a
