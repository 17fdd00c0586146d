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

#include "naive_a/flow.hpp"

#include <set>
#include <string>

namespace naive_a {
namespace {

void assign_tree(const Space& space, const Component& c, const Dist& scale,
                 std::vector<std::optional<AugPoint>>& succ) {
  auto adj = rips_neighbors(space, c.points, scale);
  std::vector<PointIndex> sources;
  if (c.has_tail()) {
    sources.push_back(c.basepoint);
  } else {
    validate_ray(space, c, scale);
    sources = c.ray;
  }
  RipsBfs bfs = rips_bfs(c.points, adj, sources);
  for (std::size_t i = 0; i < c.points.size(); ++i) {
    if (bfs.depth[i] < 0) {
      throw InvariantViolation("component " + std::to_string(c.id) +
                               " is not S-connected at '" +
                               space.id(c.points[i]) + "'");
    }
    if (bfs.parent[i] >= 0) {
      succ[c.points[i]] = AugPoint::base(c.points[bfs.parent[i]]);
    }
  }
  if (c.has_tail()) {
    succ[c.basepoint] = AugPoint::tail(c.id, 1);
  } else {
    for (std::size_t i = 0; i + 1 < c.ray.size(); ++i) {
      succ[c.ray[i]] = AugPoint::base(c.ray[i + 1]);
    }
    succ[c.ray.back()] = std::nullopt;
  }
}

}  // namespace

std::optional<AugPoint> FlowMap::successor(AugPoint p) const {
  if (p.is_base()) {
    if (p.point() >= base_successors_.size()) {
      throw InvariantViolation("flow queried outside its domain");
    }
    return base_successors_[p.point()];
  }
  if (p.index() >= tail_cap_) return std::nullopt;
  return AugPoint::tail(p.component(), p.index() + 1);
}

void validate_ray(const Space& space, const Component& c, const Dist& scale) {
  const auto& ray = c.ray;
  if (ray.empty()) {
    throw PreconditionError("component " + std::to_string(c.id) +
                            " has no ray");
  }
  if (ray.front() != c.basepoint) {
    throw PreconditionError("ray does not start at the basepoint '" +
                            space.id(c.basepoint) + "'");
  }
  std::set<PointIndex> seen;
  for (std::size_t i = 0; i < ray.size(); ++i) {
    if (!c.contains(ray[i])) {
      throw PreconditionError("ray point '" + space.id(ray[i]) +
                              "' lies outside its component");
    }
    if (!seen.insert(ray[i]).second) {
      throw PreconditionError("ray repeats '" + space.id(ray[i]) + "'");
    }
    if (i > 0 && space.distance(ray[i - 1], ray[i]) > scale) {
      throw PreconditionError("ray step '" + space.id(ray[i - 1]) + "' -> '" +
                              space.id(ray[i]) + "' is longer than S");
    }
  }
}

FlowMap build_flow(const AugmentedSpace& x) {
  const Space& space = x.base();
  std::vector<std::optional<AugPoint>> succ(space.size());
  for (const auto& c : x.decomposition().components) {
    assign_tree(space, c, x.params().S, succ);
  }
  return FlowMap(std::move(succ), x.tail_cap());
}

FlowMap build_ray_flow(const Space& space, const Component& component,
                       const Dist& scale) {
  Component c = component;
  c.cls = ComponentClass::kUnboundedEmulated;
  std::vector<std::optional<AugPoint>> succ(space.size());
  assign_tree(space, c, scale, succ);
  return FlowMap(std::move(succ), 0);
}

std::pair<Chain, Chain> split(const Chain& a) {
  Chain b;
  Chain t;
  for (const auto& [p, v] : a) {
    b.add(p, 1);
    t.add(p, v - 1);
  }
  return {b, t};
}

Chain step(const FlowMap& flow, const Chain& a) {
  Chain out;
  for (const auto& [p, v] : a) {
    out.add(p, 1);
    if (v > 1) {
      auto next = flow.successor(p);
      if (!next) {
        std::string where = p.is_base()
                                ? "base point #" + std::to_string(p.point())
                                : "tail " + std::to_string(p.component()) +
                                      "#" + std::to_string(p.index());
        throw WindowOverflow("excess mass " + std::to_string(v - 1) + " at " +
                             where + " has no successor inside the window");
      }
      out.add(*next, v - 1);
    }
  }
  return out;
}

Stabilized stabilize(const FlowMap& flow, const Chain& a, const TraceFn& trace) {
  const Count mass = l1_norm(a);
  if (mass == 0) throw InvariantViolation("cannot stabilize an empty chain");
  Stabilized out;
  out.bound = mass * l1_norm(split(a).second);
  out.chain = a;
  if (trace) trace(0, out.chain);
  while (!out.chain.is_indicator()) {
    if (out.iterations == out.bound) {
      throw InvariantViolation("flow did not stabilize within " +
                               std::to_string(out.bound) + " steps");
    }
    out.chain = step(flow, out.chain);
    ++out.iterations;
    if (trace) trace(out.iterations, out.chain);
  }
  if (out.chain.support_size() != mass) {
    throw InvariantViolation("stabilized support has " +
                             std::to_string(out.chain.support_size()) +
                             " points, expected " + std::to_string(mass));
  }
  return out;
}

}  // namespace naive_a
