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

#ifndef NAIVE_A_FLOW_HPP_
#define NAIVE_A_FLOW_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "naive_a/augment.hpp"
#include "naive_a/chain.hpp"
#include "naive_a/errors.hpp"

namespace naive_a {

// Raised when excess mass must move past the end of the materialized window:
// beyond the last tail point, or past the far end of an emulated ray.
class WindowOverflow : public InvariantViolation {
 public:
  using InvariantViolation::InvariantViolation;
};

// The successor map sigma. Base points carry an explicit successor (nullopt
// marks a sink, i.e. the far end of a ray); tail points step to the next tail
// index until tail_cap, whose successor is outside the window.
class FlowMap {
 public:
  FlowMap(std::vector<std::optional<AugPoint>> base_successors,
          std::uint32_t tail_cap)
      : base_successors_(std::move(base_successors)), tail_cap_(tail_cap) {}

  std::optional<AugPoint> successor(AugPoint p) const;

  std::span<const std::optional<AugPoint>> base_successors() const {
    return base_successors_;
  }
  std::uint32_t tail_cap() const { return tail_cap_; }

 private:
  std::vector<std::optional<AugPoint>> base_successors_;
  std::uint32_t tail_cap_;
};

// sigma for every component of the augmented space. Components with a tail
// use the BFS tree of their S-Rips graph rooted at the basepoint (neighbours
// in id order, parent = first discoverer) and continue into the tail.
// Emulated-unbounded components use a BFS seeded with the ray in ray order and
// then follow the ray. Throws PreconditionError if a ray is invalid.
FlowMap build_flow(const AugmentedSpace& space);

// sigma for a single emulated-unbounded component, other points left as
// sinks. Used to trial a ray before committing to it.
FlowMap build_ray_flow(const Space& space, const Component& component,
                       const Dist& scale);

// The ray must start at the basepoint, stay inside the component, never
// repeat a point and take steps of length <= S.
void validate_ray(const Space& space, const Component& component,
                  const Dist& scale);

// b(a) = indicator of supp(a), t(a) = a - b(a).
std::pair<Chain, Chain> split(const Chain& a);

// s_1(a)(x) = b(a)(x) + sum over sigma(y) = x of t(a)(y).
Chain step(const FlowMap& flow, const Chain& a);

struct Stabilized {
  Chain chain;                  // s_infinity(a), {0,1}-valued
  std::uint64_t iterations = 0;  // smallest n with s_n(a) {0,1}-valued
  std::uint64_t bound = 0;       // ||a||_1 * ||t(a)||_1
};

using TraceFn = std::function<void(std::uint64_t iteration, const Chain&)>;

// Iterates s_1 until the chain is {0,1}-valued. Throws InvariantViolation if
// the iteration bound is exceeded or the result does not have ||a||_1 support
// points, and WindowOverflow if mass leaves the window. The trace callback,
// if given, sees the input (iteration 0) and every iterate.
Stabilized stabilize(const FlowMap& flow, const Chain& a,
                     const TraceFn& trace = {});

}  // namespace naive_a

#endif  // NAIVE_A_FLOW_HPP_
