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

#ifndef NAIVE_A_DECOMPOSITION_HPP_
#define NAIVE_A_DECOMPOSITION_HPP_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "naive_a/space.hpp"

namespace naive_a {

using ComponentId = std::uint32_t;

enum class ComponentClass {
  kUnboundedEmulated,  // follows a user-designated ray; no tail attached
  kBoundedSmall,       // X_lambda fits inside ball(x_lambda, 3S+4SN)
  kBoundedLarge,       // X_lambda leaves ball(x_lambda, 3S+4SN)
};

std::string_view to_string(ComponentClass cls);

struct Component {
  ComponentId id = 0;
  std::vector<PointIndex> points;  // sorted
  PointIndex basepoint = 0;
  ComponentClass cls = ComponentClass::kBoundedSmall;
  // Non-empty iff an unbounded hint names this component. ray.front() is the
  // basepoint when the hint is usable.
  std::vector<PointIndex> ray;

  bool contains(PointIndex p) const;
  bool has_tail() const { return cls != ComponentClass::kUnboundedEmulated; }
};

// Partition of a space into the connected components of its S-Rips graph.
struct Decomposition {
  Dist scale;
  std::vector<Component> components;  // ordered by smallest member
  std::vector<ComponentId> component_of;

  const Component& component_containing(PointIndex p) const {
    return components[component_of[p]];
  }
};

// Components of the graph {x,y : d(x,y) <= S}. Basepoints are the smallest
// member unless an unbounded hint on the space designates a ray, in which
// case the ray's first point is used (when it lies in the component). All
// classes are provisionally kBoundedSmall.
Decomposition rips_components(const Space& space, const Dist& scale);

// Adjacency of the S-Rips graph restricted to `points` (sorted). Entry i
// lists the neighbours of points[i] in index order.
std::vector<std::vector<PointIndex>> rips_neighbors(
    const Space& space, std::span<const PointIndex> points, const Dist& scale);

// Breadth-first search over an S-Rips graph given by rips_neighbors. Sources
// are enqueued in the order given, neighbours are explored in index order and
// every point's parent is the first point that discovered it.
struct RipsBfs {
  std::vector<PointIndex> order;     // visit order
  std::vector<std::int64_t> parent;  // local index of parent, -1 for sources
  std::vector<std::int64_t> depth;   // -1 when unreached
};

RipsBfs rips_bfs(std::span<const PointIndex> points,
                 const std::vector<std::vector<PointIndex>>& neighbors,
                 std::span<const PointIndex> sources);

// Local index of p in a sorted point list, or -1.
std::int64_t local_index(std::span<const PointIndex> points, PointIndex p);

}  // namespace naive_a

#endif  // NAIVE_A_DECOMPOSITION_HPP_
