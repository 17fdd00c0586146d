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
#include <optional>
#include <sstream>

#include "naive_a/errors.hpp"
#include "naive_a/parallel.hpp"

namespace naive_a {
namespace {

// Why a ray hint cannot be used, or empty if it can.
std::string trial_ray(const Space& space, const Component& c,
                      const InstanceParams& params, const ChainFamily& chains) {
  std::optional<FlowMap> flow;
  try {
    flow.emplace(build_ray_flow(space, c, params.S));
  } catch (const PreconditionError& e) {
    return e.what();
  }
  for (PointIndex x : c.points) {
    try {
      stabilize(*flow, chains[x]);
    } catch (const WindowOverflow&) {
      return "flow of a_" + space.id(x) + " runs past the ray end " +
             space.id(c.ray.back());
    }
  }
  return {};
}

std::size_t intersection_size(const std::vector<PointIndex>& a,
                              const std::vector<PointIndex>& b) {
  std::size_t n = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++n;
      ++i;
      ++j;
    }
  }
  return n;
}

bool meets_tail(const Chain& c) { return !c.base_only(); }

std::vector<PointIndex> base_part(const std::vector<AugPoint>& support) {
  std::vector<PointIndex> out;
  for (AugPoint p : support) {
    if (p.is_base()) out.push_back(p.point());
  }
  return out;
}

}  // namespace

TailorPlan classify(const Space& space, Decomposition decomposition,
                    const InstanceParams& params, const ChainFamily& chains) {
  if (params.N < 1) throw InvariantViolation("N must be set before classify");
  TailorPlan plan;
  plan.inner = params.annulus_inner();
  plan.outer = params.annulus_outer();
  plan.annulus.resize(decomposition.components.size());

  for (Component& c : decomposition.components) {
    if (!c.ray.empty()) {
      std::string reason = trial_ray(space, c, params, chains);
      if (reason.empty()) {
        c.cls = ComponentClass::kUnboundedEmulated;
        continue;
      }
      plan.warnings.push_back("unbounded hint for component of '" +
                              space.id(c.points.front()) +
                              "' rejected, treated as bounded: " + reason);
      c.ray.clear();
      c.basepoint = c.points.front();
    }
    bool large = std::any_of(c.points.begin(), c.points.end(), [&](PointIndex p) {
      return space.distance(c.basepoint, p) > plan.outer;
    });
    c.cls = large ? ComponentClass::kBoundedLarge : ComponentClass::kBoundedSmall;
    if (large) plan.annulus[c.id] = annulus_points(space, c, params);
  }
  plan.decomposition = std::move(decomposition);
  return plan;
}

std::vector<PointIndex> annulus_points(const Space& space,
                                       const Component& c,
                                       const InstanceParams& params) {
  const Dist inner = params.annulus_inner();
  const Dist outer = params.annulus_outer();
  auto target = std::find_if(c.points.begin(), c.points.end(), [&](PointIndex p) {
    return space.distance(c.basepoint, p) > outer;
  });
  if (target == c.points.end()) {
    throw PreconditionError("component of '" + space.id(c.basepoint) +
                            "' lies inside ball(x_lambda, 3S+4SN)");
  }

  auto adj = rips_neighbors(space, c.points, params.S);
  const PointIndex sources[] = {c.basepoint};
  RipsBfs bfs = rips_bfs(c.points, adj, sources);
  std::int64_t at = local_index(c.points, *target);
  if (bfs.depth[at] < 0) {
    throw InvariantViolation("component is not S-connected");
  }
  std::vector<PointIndex> path;
  for (; at >= 0; at = bfs.parent[at]) path.push_back(c.points[at]);
  std::reverse(path.begin(), path.end());

  std::vector<PointIndex> z;
  for (PointIndex p : path) {
    if (z.size() == static_cast<std::size_t>(params.N)) break;
    Dist d = space.distance(c.basepoint, p);
    if (inner < d && d <= outer) z.push_back(p);
  }
  if (z.size() != static_cast<std::size_t>(params.N)) {
    throw InvariantViolation("only " + std::to_string(z.size()) +
                             " annulus points on the path to '" +
                             space.id(*target) + "', need " +
                             std::to_string(params.N));
  }
  return z;
}

std::vector<PointIndex> phi(const TailorPlan& plan, ComponentId lambda,
                            std::span<const AugPoint> subset) {
  if (lambda >= plan.decomposition.components.size()) {
    throw MalformedInput("unknown component " + std::to_string(lambda));
  }
  if (subset.empty()) throw PreconditionError("phi of an empty set");
  const Component& c = plan.decomposition.components[lambda];
  const auto& z = plan.annulus[lambda];

  std::vector<PointIndex> out;
  for (AugPoint p : subset) {
    if (p.is_base()) {
      if (!c.contains(p.point())) {
        throw InvariantViolation("phi argument leaves its component");
      }
      out.push_back(p.point());
      continue;
    }
    if (p.component() != lambda || !c.has_tail()) {
      throw InvariantViolation("phi argument contains a foreign tail point");
    }
    if (c.cls == ComponentClass::kBoundedLarge) {
      if (p.index() > z.size()) {
        throw InvariantViolation("phi argument contains tail index " +
                                 std::to_string(p.index()) + " beyond N");
      }
      out.push_back(z[p.index() - 1]);
    }
  }
  if (c.cls == ComponentClass::kBoundedSmall) return c.points;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string_view to_string(StepCase c) {
  switch (c) {
    case StepCase::kUnbounded:
      return "1";
    case StepCase::kSmall:
      return "2";
    case StepCase::kLargeInside:
      return "3a";
    case StepCase::kLargeTail:
      return "3b";
  }
  return "?";
}

StepCase parse_step_case(std::string_view text) {
  if (text == "1") return StepCase::kUnbounded;
  if (text == "2") return StepCase::kSmall;
  if (text == "3a") return StepCase::kLargeInside;
  if (text == "3b") return StepCase::kLargeTail;
  throw MalformedInput("unknown case label '" + std::string(text) + "'");
}

std::string describe_violations(const Space& space,
                                const InstanceReport& report,
                                std::size_t limit) {
  std::ostringstream os;
  std::size_t shown = 0;
  for (const auto& v : report.support_violations) {
    if (shown++ == limit) break;
    os << "condition (ii): supp(a_" << space.id(v.x) << ") contains "
       << space.id(v.z) << " at distance " << v.distance << " > S\n";
  }
  for (const auto& v : report.ratio_violations) {
    if (shown++ == limit) break;
    os << "condition (i): ratio(a_" << space.id(v.x) << ", a_" << space.id(v.y)
       << ") = " << v.ratio.to_string() << " is not < epsilon\n";
  }
  std::size_t total =
      report.support_violations.size() + report.ratio_violations.size();
  if (total > limit) os << "... " << (total - limit) << " more\n";
  return os.str();
}

PipelineResult run_pipeline(const Space& space, const ChainFamily& chains,
                            const Rational& R, const Rational& epsilon,
                            const Dist& S, const PipelineOptions& options) {
  InstanceReport report = check_instance(space, chains, R, epsilon, S);
  if (!report.ok()) {
    throw PreconditionError("chain family is not a Property A witness:\n" +
                            describe_violations(space, report));
  }

  PipelineResult result;
  result.params = report.params;
  const InstanceParams& params = result.params;
  result.plan = classify(space, rips_components(space, S), params, chains);
  const TailorPlan& plan = result.plan;
  const AugmentedSpace aug = augment(space, plan.decomposition, params);
  const FlowMap flow = build_flow(aug);

  const std::size_t n = space.size();
  result.flowed.resize(n);
  result.subsets.resize(n);
  Certificate& cert = result.certificate;
  cert.L = params.L;
  cert.N = params.N;
  cert.case1_bound = params.flow_radius();
  cert.case2_bound = params.small_radius();
  cert.case3_bound = params.large_radius();
  cert.bound_radius = params.bound_radius();
  cert.cases.resize(n);
  cert.radii.resize(n);

  auto per_point = [&](std::size_t i) {
    const auto x = static_cast<PointIndex>(i);
    const Component& c = plan.decomposition.component_containing(x);
    TraceFn trace;
    if (options.trace) {
      trace = [&](std::uint64_t it, const Chain& ch) { options.trace(x, it, ch); };
    }
    Stabilized st = stabilize(flow, chains[x], trace);
    std::vector<AugPoint> support = st.chain.support();
    for (AugPoint u : support) {
      if (aug.component_of(u) != c.id) {
        throw InvariantViolation("flow of a_" + space.id(x) +
                                 " left its component at " + aug.label(u));
      }
      if (u.is_tail() && u.index() > params.N) {
        throw InvariantViolation("flow of a_" + space.id(x) +
                                 " reached tail index beyond N");
      }
      if (aug.dist(AugPoint::base(x), u) > params.flow_radius()) {
        throw InvariantViolation("flow of a_" + space.id(x) + " reached " +
                                 aug.label(u) + " outside ball(x, S+SL^2)");
      }
    }

    std::vector<PointIndex> subset = phi(plan, c.id, support);
    StepCase sc = StepCase::kSmall;
    if (c.cls == ComponentClass::kUnboundedEmulated) {
      sc = StepCase::kUnbounded;
    } else if (c.cls == ComponentClass::kBoundedLarge) {
      sc = meets_tail(st.chain) ? StepCase::kLargeTail : StepCase::kLargeInside;
    }
    if ((sc == StepCase::kUnbounded || sc == StepCase::kLargeInside) &&
        subset != base_part(support)) {
      throw InvariantViolation("phi changed the flowed support of a_" +
                               space.id(x) + " in case " +
                               std::string(to_string(sc)));
    }
    Dist radius(0);
    for (PointIndex y : subset) radius = std::max(radius, space.distance(x, y));

    cert.cases[x] = sc;
    cert.radii[x] = radius;
    result.flowed[x] = std::move(st);
    result.subsets[x] = std::move(subset);
  };
  parallel_for(n, options.trace ? 1u : options.jobs, per_point);

  for (PointIndex x = 0; x < n; ++x) {
    const Dist& bound = cert.cases[x] == StepCase::kUnbounded ? cert.case1_bound
                        : cert.cases[x] == StepCase::kSmall   ? cert.case2_bound
                                                              : cert.case3_bound;
    if (cert.radii[x] > bound) {
      cert.violations.push_back("radius of A_" + space.id(x) + " is " +
                                cert.radii[x].to_string() +
                                ", above the case bound " + bound.to_string());
    }
    cert.worst_radius = std::max(cert.worst_radius, cert.radii[x]);
  }

  for (const auto& [x, y] : close_pairs(space, R)) {
    PairRecord rec{x, y, variation_ratio(chains[x], chains[y]),
                   set_ratio(result.subsets[x], result.subsets[y])};
    const Component& c = plan.decomposition.component_containing(x);
    const Chain& fx = result.flowed[x].chain;
    const Chain& fy = result.flowed[y].chain;

    Ratio flowed = variation_ratio(fx, fy);
    if (flowed > rec.input) {
      throw InvariantViolation("flow increased the ratio of (" + space.id(x) +
                               ", " + space.id(y) + ") from " +
                               rec.input.to_string() + " to " +
                               flowed.to_string());
    }

    if (c.cls == ComponentClass::kBoundedLarge &&
        (meets_tail(fx) || meets_tail(fy))) {
      ++cert.branch_3b_pairs;
      const auto& z = plan.annulus[c.id];
      for (auto [w, fw] : {std::pair{x, &fx}, std::pair{y, &fy}}) {
        if (meets_tail(*fw) &&
            space.distance(w, c.basepoint) > params.locality_radius()) {
          throw InvariantViolation("case 3b: d(" + space.id(w) +
                                   ", x_lambda) exceeds S+2NS");
        }
        for (const auto& [u, v] : *fw) {
          if (u.is_base() &&
              std::find(z.begin(), z.end(), u.point()) != z.end()) {
            throw InvariantViolation("case 3b: flowed support of a_" +
                                     space.id(w) + " meets annulus point " +
                                     space.id(u.point()));
          }
        }
      }
      std::vector<AugPoint> sx = fx.support();
      std::vector<AugPoint> sy = fy.support();
      std::vector<AugPoint> both;
      std::set_intersection(sx.begin(), sx.end(), sy.begin(), sy.end(),
                            std::back_inserter(both));
      const auto& ax = result.subsets[x];
      const auto& ay = result.subsets[y];
      std::size_t out_common = intersection_size(ax, ay);
      std::size_t out_sym = ax.size() + ay.size() - 2 * out_common;
      std::size_t in_sym = sx.size() + sy.size() - 2 * both.size();
      if (out_common != both.size() || out_sym != in_sym) {
        throw InvariantViolation("case 3b: phi does not preserve the "
                                 "intersection/symmetric difference of (" +
                                 space.id(x) + ", " + space.id(y) + ")");
      }
    }

    if (rec.output > rec.input || !(rec.output < epsilon)) {
      cert.violations.push_back("ratio of (" + space.id(x) + ", " +
                                space.id(y) + ") is " + rec.output.to_string() +
                                " against input " + rec.input.to_string());
    }
    cert.worst_ratio = std::max(cert.worst_ratio, rec.output);
    cert.input_worst_ratio = std::max(cert.input_worst_ratio, rec.input);
    cert.pairs.push_back(std::move(rec));
  }
  return result;
}

}  // namespace naive_a
