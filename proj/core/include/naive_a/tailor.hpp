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

#ifndef NAIVE_A_TAILOR_HPP_
#define NAIVE_A_TAILOR_HPP_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "naive_a/augment.hpp"
#include "naive_a/chain.hpp"
#include "naive_a/decomposition.hpp"
#include "naive_a/flow.hpp"
#include "naive_a/space.hpp"

namespace naive_a {

// Final classification of every component plus the annulus points used to
// pull tail points back into X.
struct TailorPlan {
  Decomposition decomposition;  // classes and basepoints finalized
  // annulus[lambda] = z^(1..N) for kBoundedLarge components, empty otherwise.
  std::vector<std::vector<PointIndex>> annulus;
  Dist inner;  // 3S + 3SN
  Dist outer;  // 3S + 4SN
  std::vector<std::string> warnings;
};

// Labels each component. A component with an unbounded hint becomes
// kUnboundedEmulated when its ray is valid and every chain based in the
// component stabilizes without running off the end of the ray; otherwise the
// hint is dropped with a warning and the component is treated as bounded
// (basepoint reset to its smallest point). Bounded components are
// kBoundedLarge iff some point lies outside ball(x_lambda, 3S+4SN).
TailorPlan classify(const Space& space, Decomposition decomposition,
                    const InstanceParams& params, const ChainFamily& chains);

// z^(1..N): walks a shortest S-Rips path from the basepoint to the smallest
// point outside ball(x_lambda, outer) and keeps the first N path vertices with
// inner < d(x_lambda, z) <= outer.
std::vector<PointIndex> annulus_points(const Space& space,
                                       const Component& component,
                                       const InstanceParams& params);

// Pulls a non-empty subset of the truncated component back into X. Result is
// sorted.
std::vector<PointIndex> phi(const TailorPlan& plan, ComponentId lambda,
                            std::span<const AugPoint> subset);

// Which branch of the case analysis a point (or pair) falls in.
enum class StepCase {
  kUnbounded,    // "1"
  kSmall,        // "2"
  kLargeInside,  // "3a": flowed support avoids the tail
  kLargeTail,    // "3b": flowed support meets the tail
};

std::string_view to_string(StepCase c);
StepCase parse_step_case(std::string_view text);

// subsets[x] is the output set for x, sorted.
using SubsetFamily = std::vector<std::vector<PointIndex>>;

struct PairRecord {
  PointIndex x = 0;
  PointIndex y = 0;
  Ratio input;   // variation_ratio(a_x, a_y)
  Ratio output;  // set_ratio(subsets[x], subsets[y])

  friend bool operator==(const PairRecord&, const PairRecord&) = default;
};

struct Certificate {
  std::int64_t L = 0;
  std::int64_t N = 0;
  Dist case1_bound;   // S + SL^2
  Dist case2_bound;   // 6S + 8SN
  Dist case3_bound;   // 4S + 6NS
  Dist bound_radius;  // 6S + 8NS, the largest of the three
  std::vector<StepCase> cases;  // per point
  std::vector<Dist> radii;      // per point: max d(x, y) over y in subsets[x]
  std::vector<PairRecord> pairs;  // every x < y with d(x, y) <= R
  Ratio worst_ratio;
  Ratio input_worst_ratio;
  Dist worst_radius;
  std::uint64_t branch_3b_pairs = 0;
  // Guarantees that failed (ratio or radius). Empty for a valid witness.
  std::vector<std::string> violations;

  bool passed() const { return violations.empty(); }
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct PipelineOptions {
  unsigned jobs = 1;
  // Per-point flow trace; forces sequential evaluation.
  std::function<void(PointIndex x, std::uint64_t iteration, const Chain&)>
      trace;
};

struct PipelineResult {
  InstanceParams params;
  TailorPlan plan;
  std::vector<Stabilized> flowed;  // s_infinity(a_x) per point
  SubsetFamily subsets;
  Certificate certificate;
};

// Builds the subset family from a chain family. Throws PreconditionError if
// the chains fail check_instance and InvariantViolation if any structural
// guarantee of the construction breaks. Ratio and radius guarantees are
// asserted per point and per pair and recorded in certificate.violations.
PipelineResult run_pipeline(const Space& space, const ChainFamily& chains,
                            const Rational& R, const Rational& epsilon,
                            const Dist& S, const PipelineOptions& options = {});

// Same checks as run_pipeline's precondition, formatted for a report.
std::string describe_violations(const Space& space,
                                const InstanceReport& report,
                                std::size_t limit = 10);

}  // namespace naive_a

#endif  // NAIVE_A_TAILOR_HPP_
