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

#include "naive_a/decomposition.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "naive_a/errors.hpp"

namespace naive_a {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Keeps the smaller root so each set is represented by its smallest member.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::string_view to_string(ComponentClass cls) {
  switch (cls) {
    case ComponentClass::kUnboundedEmulated:
      return "UNBOUNDED_EMULATED";
    case ComponentClass::kBoundedSmall:
      return "BOUNDED_SMALL";
    case ComponentClass::kBoundedLarge:
      return "BOUNDED_LARGE";
  }
  return "?";
}

bool Component::contains(PointIndex p) const {
  return std::binary_search(points.begin(), points.end(), p);
}

std::int64_t local_index(std::span<const PointIndex> points, PointIndex p) {
  auto it = std::lower_bound(points.begin(), points.end(), p);
  if (it == points.end() || *it != p) return -1;
  return it - points.begin();
}

Decomposition rips_components(const Space& space, const Dist& scale) {
  if (!scale.is_positive()) throw PreconditionError("Rips scale must be > 0");
  const std::size_t n = space.size();
  DisjointSets sets(n);
  for (PointIndex a = 0; a < n; ++a) {
    for (PointIndex b = a + 1; b < n; ++b) {
      if (space.distance(a, b) <= scale) sets.unite(a, b);
    }
  }

  Decomposition dec;
  dec.scale = scale;
  dec.component_of.assign(n, 0);
  std::vector<std::int64_t> root_to_component(n, -1);
  for (PointIndex p = 0; p < n; ++p) {
    std::size_t root = sets.find(p);
    if (root_to_component[root] < 0) {
      root_to_component[root] = static_cast<std::int64_t>(dec.components.size());
      Component c;
      c.id = static_cast<ComponentId>(dec.components.size());
      c.basepoint = p;  // smallest member: roots are visited in index order
      dec.components.push_back(std::move(c));
    }
    auto cid = static_cast<ComponentId>(root_to_component[root]);
    dec.components[cid].points.push_back(p);
    dec.component_of[p] = cid;
  }

  for (const auto& hint : space.hints()) {
    Component& c = dec.components[dec.component_of[space.index_of(hint.component_of)]];
    if (!c.ray.empty()) {
      throw MalformedInput("component of '" + hint.component_of +
                           "' carries more than one unbounded hint");
    }
    for (const auto& id : hint.ray) c.ray.push_back(space.index_of(id));
    if (c.contains(c.ray.front())) c.basepoint = c.ray.front();
  }
  return dec;
}

std::vector<std::vector<PointIndex>> rips_neighbors(
    const Space& space, std::span<const PointIndex> points, const Dist& scale) {
  std::vector<std::vector<PointIndex>> adj(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (space.distance(points[i], points[j]) <= scale) {
        adj[i].push_back(points[j]);
        adj[j].push_back(points[i]);
      }
    }
  }
  // Pairs are generated in index order, so each list is already sorted.
  return adj;
}

RipsBfs rips_bfs(std::span<const PointIndex> points,
                 const std::vector<std::vector<PointIndex>>& neighbors,
                 std::span<const PointIndex> sources) {
  RipsBfs bfs;
  bfs.parent.assign(points.size(), -1);
  bfs.depth.assign(points.size(), -1);
  std::deque<std::size_t> queue;
  for (PointIndex s : sources) {
    std::int64_t li = local_index(points, s);
    if (li < 0) throw InvariantViolation("BFS source outside component");
    if (bfs.depth[li] >= 0) continue;
    bfs.depth[li] = 0;
    queue.push_back(static_cast<std::size_t>(li));
  }
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    bfs.order.push_back(points[u]);
    for (PointIndex v : neighbors[u]) {
      auto lv = static_cast<std::size_t>(local_index(points, v));
      if (bfs.depth[lv] >= 0) continue;
      bfs.depth[lv] = bfs.depth[u] + 1;
      bfs.parent[lv] = static_cast<std::int64_t>(u);
      queue.push_back(lv);
    }
  }
  return bfs;
}

}  // namespace naive_a
