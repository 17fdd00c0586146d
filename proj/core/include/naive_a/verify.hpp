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

#ifndef NAIVE_A_VERIFY_HPP_
#define NAIVE_A_VERIFY_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "naive_a/chain.hpp"
#include "naive_a/space.hpp"
#include "naive_a/tailor.hpp"

namespace naive_a {

struct VerifyReport {
  bool passed = false;
  std::vector<std::string> violations;
  std::size_t pairs_checked = 0;
  Ratio worst_ratio;
  Dist support_radius;  // max over x and y in A_x of d(x, y)
};

// Checks a subset family directly against the naive Property A conditions:
// |A_x sym-diff A_y| / |A_x cap A_y| < epsilon whenever d(x, y) <= R. The
// support radius is measured and reported; it always exists for a finite
// family. Throws MalformedInput for an empty subset or an unknown point.
VerifyReport verify_naive(const Space& space, const SubsetFamily& subsets,
                          const Rational& R, const Rational& epsilon);

// Rebuilds the subsets and every certificate field from the instance and
// compares them with the given ones. passed is false at the first divergent
// field, which is named in violations.front().
VerifyReport verify_certificate(const Space& space, const ChainFamily& chains,
                                const InstanceParams& params,
                                const SubsetFamily& subsets,
                                const Certificate& certificate);

struct MonitorSpec {
  std::size_t points = 5;  // support lies on the first `points` path vertices
  Count max_value = 2;     // entries range over 0..max_value
};

struct MonitorReport {
  bool passed = true;
  std::uint64_t chains = 0;  // chains enumerated
  std::uint64_t pairs = 0;   // ordered pairs enumerated
  std::uint64_t max_iterations = 0;
  std::vector<std::string> failures;  // counterexamples, capped
};

// Exhaustively checks the flow laws on a path sigma(p_i) = p_{i+1}: l1
// preservation, the fixed-point characterization, support drift, the
// stabilization bound and |supp s_inf(a)| = ||a||_1 for every chain, and
// monotonicity, meet growth, difference contraction and ratio contraction
// for every ordered pair.
MonitorReport flow_monitor(const MonitorSpec& spec);

}  // namespace naive_a

#endif  // NAIVE_A_VERIFY_HPP_
