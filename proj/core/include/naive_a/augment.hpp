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

#ifndef NAIVE_A_AUGMENT_HPP_
#define NAIVE_A_AUGMENT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "naive_a/chain.hpp"
#include "naive_a/decomposition.hpp"
#include "naive_a/space.hpp"

namespace naive_a {

// X with an S-spaced tail y^(1), y^(2), ... glued at the basepoint of every
// component that has one (all but emulated-unbounded components). Tails are
// materialized up to index tail_cap; anything beyond is out of the window and
// requesting it is an invariant violation.
//
// Distances:
//   base x, base x'          d(x, x')
//   base x, tail (l', j)     d(x, x_l') + jS
//   tail (l, i), tail (l, j) |i - j| S
//   tail (l, i), tail (l', j), l != l'
//                            iS + d(x_l, x_l') + jS
class AugmentedSpace {
 public:
  AugmentedSpace(Space base, Decomposition decomposition,
                 InstanceParams params, std::uint32_t tail_cap);

  const Space& base() const { return base_; }
  const Decomposition& decomposition() const { return decomposition_; }
  const InstanceParams& params() const { return params_; }
  std::uint32_t tail_cap() const { return tail_cap_; }

  bool has_tail(ComponentId lambda) const;

  // Component of the augmented point (tails belong to their component).
  ComponentId component_of(AugPoint p) const;

  Dist dist(AugPoint u, AugPoint v) const;

  // Base points of the component followed by its tail up to tail_cap; just
  // the base points for emulated-unbounded components.
  std::vector<AugPoint> truncate(ComponentId lambda) const;

  // Every base point followed by every materialized tail point.
  std::vector<AugPoint> materialized() const;

  // "id" for base points, "lambda#j" for tail points.
  std::string label(AugPoint p) const;

  // Throws InvariantViolation if p is not a materialized point.
  void check(AugPoint p) const;

 private:
  Dist leg(AugPoint tail) const;  // d(tail, basepoint) = jS

  Space base_;
  Decomposition decomposition_;
  InstanceParams params_;
  std::uint32_t tail_cap_;
};

// Tails are materialized up to N = params.N.
AugmentedSpace augment(const Space& space, const Decomposition& decomposition,
                       const InstanceParams& params);

inline Dist aug_dist(const AugmentedSpace& x, AugPoint u, AugPoint v) {
  return x.dist(u, v);
}

inline std::vector<AugPoint> truncate(const AugmentedSpace& x,
                                      ComponentId lambda) {
  return x.truncate(lambda);
}

}  // namespace naive_a

#endif  // NAIVE_A_AUGMENT_HPP_
