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

#include "naive_a/tailor.hpp"

#include <algorithm>
#include <string>

#include <gtest/gtest.h>

#include "naive_a/errors.hpp"
#include "naive_a/generators.hpp"
#include "test_support.hpp"

namespace naive_a {
namespace {

using testing::chain;
using testing::points;

std::string q(std::int64_t i) { return "q" + std::to_string(i); }

InstanceParams make_params(Dist S, std::int64_t L) {
  InstanceParams p;
  p.R = 1;
  p.epsilon = 5;
  p.S = S;
  p.set_mass_bound(L);
  return p;
}

// a_x = {x:2, next:1} on the line q0..q{n-1}; the last point leans back.
ChainFamily leaning_chains(const Space& s, std::int64_t n) {
  ChainFamily cf(s.size());
  for (std::int64_t i = 0; i < n; ++i) {
    PointIndex x = s.index_of(q(i));
    if (i + 1 < n) {
      cf[x] = Chain{{AugPoint::base(x), 2},
                    {AugPoint::base(s.index_of(q(i + 1))), 1}};
    } else {
      cf[x] = Chain{{AugPoint::base(x), 2},
                    {AugPoint::base(s.index_of(q(i - 1))), 1}};
    }
  }
  return cf;
}

TEST(TailorTest, StepCaseText) {
  for (StepCase c : {StepCase::kUnbounded, StepCase::kSmall,
                     StepCase::kLargeInside, StepCase::kLargeTail}) {
    EXPECT_EQ(parse_step_case(to_string(c)), c);
  }
  EXPECT_EQ(to_string(StepCase::kLargeTail), "3b");
  EXPECT_THROW(parse_step_case("4"), MalformedInput);
}

TEST(TailorTest, SmallDiameterComponentIsSmall) {
  Space s = line_space(5, "q");
  ChainFamily cf(s.size());
  for (PointIndex x = 0; x < s.size(); ++x) cf[x] = Chain{{AugPoint::base(x), 1}};
  InstanceParams p = make_params(2, 2);  // outer radius 54
  TailorPlan plan = classify(s, rips_components(s, 2), p, cf);
  EXPECT_EQ(plan.decomposition.components[0].cls, ComponentClass::kBoundedSmall);
  EXPECT_TRUE(plan.annulus[0].empty());
}

TEST(TailorTest, LongLineIsLarge) {
  Space s = line_space(200, "q");
  ChainFamily cf(s.size());
  for (PointIndex x = 0; x < s.size(); ++x) cf[x] = Chain{{AugPoint::base(x), 1}};
  TailorPlan plan = classify(s, rips_components(s, 2), make_params(2, 2), cf);
  EXPECT_EQ(plan.decomposition.components[0].cls, ComponentClass::kBoundedLarge);
  EXPECT_EQ(plan.inner, Dist(42));
  EXPECT_EQ(plan.outer, Dist(54));
  EXPECT_EQ(plan.annulus[0].size(), 6u);
}

TEST(TailorTest, AnnulusPointsWalkTheBfsPath) {
  Space s = line_space(200, "q");
  Decomposition d = rips_components(s, 2);
  auto z = annulus_points(s, d.components[0], make_params(2, 2));
  std::vector<std::string> ids;
  for (PointIndex p : z) ids.push_back(s.id(p));
  EXPECT_EQ(ids, (std::vector<std::string>{"q44", "q46", "q48", "q50", "q52",
                                           "q54"}));
  auto z1 = annulus_points(s, d.components[0], make_params(2, 1));  // N = 3
  Dist inner = make_params(2, 1).annulus_inner();
  EXPECT_EQ(z1.size(), 3u);
  EXPECT_GT(s.distance(d.components[0].basepoint, z1.front()), inner);
}

TEST(TailorTest, PhiCases) {
  Space s = line_space(200, "q");
  ChainFamily cf(s.size());
  for (PointIndex x = 0; x < s.size(); ++x) cf[x] = Chain{{AugPoint::base(x), 1}};
  TailorPlan plan = classify(s, rips_components(s, 2), make_params(2, 2), cf);
  const auto& z = plan.annulus[0];
  std::vector<AugPoint> a{AugPoint::base(s.index_of("q1")),
                          AugPoint::base(s.index_of("q2")),
                          AugPoint::tail(0, 1), AugPoint::tail(0, 3)};
  std::vector<PointIndex> want{s.index_of("q1"), s.index_of("q2"), z[0], z[2]};
  std::sort(want.begin(), want.end());
  EXPECT_EQ(phi(plan, 0, a), want);

  plan.decomposition.components[0].cls = ComponentClass::kBoundedSmall;
  EXPECT_EQ(phi(plan, 0, a).size(), 200u);

  plan.decomposition.components[0].cls = ComponentClass::kUnboundedEmulated;
  std::vector<AugPoint> b{AugPoint::base(7), AugPoint::base(3)};
  EXPECT_EQ(phi(plan, 0, b), (std::vector<PointIndex>{3, 7}));
  EXPECT_THROW(phi(plan, 0, {}), PreconditionError);
}

TEST(TailorTest, TwoPointComponentByHand) {
  Space s = Space::from_matrix({"q0", "q1"}, {{0, 1}, {1, 0}});
  Chain both = chain(s, {{"q0", 1}, {"q1", 1}});
  PipelineResult r = run_pipeline(s, {both, both}, 1, Rational(1, 2), 2);
  EXPECT_EQ(r.params.L, 3);
  EXPECT_EQ(r.params.N, 11);
  EXPECT_EQ(r.plan.decomposition.components[0].cls,
            ComponentClass::kBoundedSmall);
  EXPECT_EQ(r.subsets[0], (std::vector<PointIndex>{0, 1}));
  EXPECT_EQ(r.subsets[1], (std::vector<PointIndex>{0, 1}));
  EXPECT_EQ(r.certificate.worst_ratio, Ratio(Rational(0)));
  EXPECT_EQ(r.certificate.worst_radius, Dist(1));
  EXPECT_EQ(r.certificate.bound_radius, Dist(188));
  EXPECT_TRUE(r.certificate.passed());
}

TEST(TailorTest, IndicatorsOnLargeComponentPassThrough) {
  Space s = line_space(200, "q");
  ChainFamily cf(s.size());
  for (std::int64_t i = 0; i < 200; ++i) {
    PointIndex x = s.index_of(q(i));
    PointIndex y = s.index_of(q(i == 199 ? 198 : i + 1));
    cf[x] = Chain{{AugPoint::base(x), 1}, {AugPoint::base(y), 1}};
  }
  PipelineResult r = run_pipeline(s, cf, 1, 3, 2);
  EXPECT_EQ(r.plan.decomposition.components[0].cls,
            ComponentClass::kBoundedLarge);
  for (PointIndex x = 0; x < s.size(); ++x) {
    EXPECT_EQ(r.certificate.cases[x], StepCase::kLargeInside);
    std::vector<PointIndex> supp;
    for (const auto& [p, v] : cf[x]) supp.push_back(p.point());
    EXPECT_EQ(r.subsets[x], supp);
  }
  EXPECT_TRUE(r.certificate.passed());
}

TEST(TailorTest, MassReachingTheTailTakesBranch3b) {
  Space s = line_space(200, "q");
  ChainFamily cf = leaning_chains(s, 200);
  PipelineResult r = run_pipeline(s, cf, 1, 5, 2);
  EXPECT_EQ(r.params.L, 4);
  EXPECT_EQ(r.params.N, 18);
  EXPECT_EQ(r.plan.decomposition.components[0].cls,
            ComponentClass::kBoundedLarge);
  PointIndex q0 = s.index_of("q0");
  EXPECT_EQ(r.certificate.cases[q0], StepCase::kLargeTail);
  EXPECT_GT(r.certificate.branch_3b_pairs, 0u);
  EXPECT_TRUE(r.certificate.passed()) << r.certificate.violations.front();
  // The tail point is replaced by the first annulus point.
  const auto& z = r.plan.annulus[0];
  EXPECT_TRUE(std::binary_search(r.subsets[q0].begin(), r.subsets[q0].end(),
                                 z[0]));
  EXPECT_LE(r.certificate.radii[q0], r.certificate.case3_bound);
}

TEST(TailorTest, EmulatedRayTakesCase1) {
  Space s = testing::hinted_line(40, 39, 0);
  ChainFamily cf(s.size());
  for (std::int64_t i = 0; i < 40; ++i) {
    PointIndex x = s.index_of("p" + std::to_string(i));
    if (i == 0) {
      cf[x] = chain(s, {{"p0", 1}, {"p1", 1}, {"p2", 1}});
    } else {
      cf[x] = Chain{{AugPoint::base(x), 2},
                    {AugPoint::base(s.index_of("p" + std::to_string(
                                        i == 39 ? 38 : i + 1))),
                     1}};
    }
  }
  PipelineResult r = run_pipeline(s, cf, 1, 5, 2);
  ASSERT_TRUE(r.plan.warnings.empty()) << r.plan.warnings.front();
  EXPECT_EQ(r.plan.decomposition.components[0].cls,
            ComponentClass::kUnboundedEmulated);
  EXPECT_EQ(s.id(r.plan.decomposition.components[0].basepoint), "p39");
  for (PointIndex x = 0; x < s.size(); ++x) {
    EXPECT_EQ(r.certificate.cases[x], StepCase::kUnbounded);
    EXPECT_LE(r.certificate.radii[x], r.params.flow_radius());
  }
  PointIndex p5 = s.index_of("p5");
  EXPECT_EQ(r.subsets[p5], points(s, {"p4", "p5", "p6"}));
  for (const auto& pr : r.certificate.pairs) EXPECT_LE(pr.output, pr.input);
  EXPECT_TRUE(r.certificate.passed());
}

TEST(TailorTest, RayThatRunsOutFallsBackToBounded) {
  Space s = testing::hinted_line(30, 0, 29);
  ChainFamily cf = weighted_ball_chains(s, std::vector<Dist>{2, 1});
  PipelineResult r = run_pipeline(s, cf, 1, 1, 3);
  ASSERT_EQ(r.plan.warnings.size(), 1u);
  const Component& c = r.plan.decomposition.components[0];
  EXPECT_NE(c.cls, ComponentClass::kUnboundedEmulated);
  EXPECT_TRUE(c.ray.empty());
  EXPECT_EQ(c.basepoint, c.points.front());
  EXPECT_TRUE(r.certificate.passed());
}

TEST(TailorTest, ParallelRunsMatchSequential) {
  Space s = line_space(200, "q");
  ChainFamily cf = leaning_chains(s, 200);
  PipelineResult a = run_pipeline(s, cf, 1, 5, 2, {.jobs = 1, .trace = {}});
  PipelineResult b = run_pipeline(s, cf, 1, 5, 2, {.jobs = 4, .trace = {}});
  EXPECT_EQ(a.subsets, b.subsets);
  EXPECT_EQ(a.certificate, b.certificate);
}

TEST(TailorTest, CertificateBounds) {
  Space s = line_space(30, "q");
  ChainFamily cf = weighted_ball_chains(s, std::vector<Dist>{2, 1});
  PipelineResult r = run_pipeline(s, cf, 1, 1, 3);
  const Certificate& c = r.certificate;
  const Dist S = 3;
  EXPECT_EQ(c.case1_bound, S + S * Dist(c.L * c.L));
  EXPECT_EQ(c.case2_bound, Dist(6) * S + Dist(8) * S * Dist(c.N));
  EXPECT_EQ(c.case3_bound, Dist(4) * S + Dist(6) * S * Dist(c.N));
  EXPECT_EQ(c.bound_radius, c.case2_bound);
  EXPECT_EQ(c.pairs.size(), close_pairs(s, 1).size());
}

TEST(TailorTest, InvalidWitnessIsAPreconditionFailure) {
  Space s = line_space(10);
  ChainFamily cf(s.size());
  for (PointIndex x = 0; x < s.size(); ++x) cf[x] = Chain{{AugPoint::base(x), 1}};
  EXPECT_THROW(run_pipeline(s, cf, 1, Rational(1, 2), 2), PreconditionError);
}

}  // namespace
}  // namespace naive_a
