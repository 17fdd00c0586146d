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

#include "naive_a/generators.hpp"

#include <gtest/gtest.h>

#include "naive_a/errors.hpp"
#include "naive_a/io.hpp"
#include "test_support.hpp"

namespace naive_a {
namespace {

using testing::chain;

TEST(GeneratorsTest, WeightedBallOnLine) {
  Space s = line_space(10);
  ChainFamily cf = weighted_ball_chains(s, std::vector<Dist>{2, 1});
  EXPECT_EQ(cf[s.index_of("p3")],
            chain(s, {{"p1", 1}, {"p2", 2}, {"p3", 2}, {"p4", 2}, {"p5", 1}}));
}

TEST(GeneratorsTest, SingleRadiusGivesIndicators) {
  Space s = grid_space(4, 4);
  for (const Chain& c : weighted_ball_chains(s, std::vector<Dist>{2})) {
    EXPECT_TRUE(c.is_indicator());
  }
}

TEST(GeneratorsTest, CyclicTranslatesOfABall) {
  std::vector<std::int64_t> gens{1};
  Space s = cyclic_space(12, gens);
  EXPECT_EQ(s.distance(s.index_of("z0"), s.index_of("z11")), Dist(1));
  EXPECT_EQ(s.distance(s.index_of("z0"), s.index_of("z6")), Dist(6));
  for (const Chain& c : translate_chains(s, 3)) {
    EXPECT_EQ(c.support_size(), 7u);
    EXPECT_TRUE(c.is_indicator());
  }
}

TEST(GeneratorsTest, CayleyInstanceHasRayHint) {
  GeneratorParams p;
  p.n = 24;
  p.folner_radius = 4;
  p.S = 10;
  Instance inst = gen_instance("cayley_cyclic", p, 0);
  EXPECT_EQ(inst.space.size(), 24u);
  ASSERT_EQ(inst.space.hints().size(), 1u);
  EXPECT_EQ(inst.space.hints()[0].ray.front(), "z0");
  EXPECT_EQ(inst.space.hints()[0].ray.size(), 24u);
}

TEST(GeneratorsTest, PathLengthsAndGaps) {
  GeneratorParams p;
  p.count = 6;
  p.min_length = 5;
  p.max_length = 9;
  Instance inst = gen_instance("disjoint_union_paths", p, 42);
  Decomposition d = rips_components(inst.space, inst.S);
  EXPECT_EQ(d.components.size(), 6u);
  for (const auto& c : d.components) {
    EXPECT_GE(c.points.size(), 5u);
    EXPECT_LE(c.points.size(), 9u);
  }
}

TEST(GeneratorsTest, SameSeedSameInstance) {
  GeneratorParams p;
  p.count = 5;
  std::string a = serialize_instance(gen_instance("weighted_ball", p, 7));
  std::string b = serialize_instance(gen_instance("weighted_ball", p, 7));
  std::string c = serialize_instance(gen_instance("weighted_ball", p, 8));
  EXPECT_EQ(a, b);
  EXPECT_NE(a, c);
}

TEST(GeneratorsTest, RejectsBadParameters) {
  GeneratorParams p;
  EXPECT_THROW(gen_instance("torus", p, 0), MalformedInput);
  p.n = 0;
  EXPECT_THROW(gen_instance("line", p, 0), MalformedInput);
  GeneratorParams q;
  q.min_length = 10;
  q.max_length = 5;
  EXPECT_THROW(gen_instance("disjoint_union_paths", q, 0), MalformedInput);
  GeneratorParams g;
  g.unbounded = true;
  EXPECT_THROW(gen_instance("grid", g, 0), MalformedInput);
}

TEST(GeneratorsTest, GeneratedSpaceRoundTrip) {
  Space s = line_space(7);
  ASSERT_TRUE(s.generator().has_value());
  Space t = generated_space(*s.generator());
  ASSERT_EQ(t.size(), 7u);
  EXPECT_EQ(t.distance(0, 6), s.distance(0, 6));
}

}  // namespace
}  // namespace naive_a
