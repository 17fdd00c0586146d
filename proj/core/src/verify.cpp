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

#include "naive_a/verify.hpp"

#include <algorithm>
#include <sstream>

#include "naive_a/errors.hpp"
#include "naive_a/flow.hpp"

namespace naive_a {
namespace {

// Independent rebuild of what run_pipeline certifies. Only the chains
// primitives and the construction stages (decomposition, classification,
// flow, phi) are shared; cases, radii and ratios are recomputed here.
struct Recomputed {
  SubsetFamily subsets;
  Certificate certificate;
};

Recomputed recompute(const Space& space, const ChainFamily& chains,
                     const InstanceParams& given) {
  InstanceReport report =
      check_instance(space, chains, given.R, given.epsilon, given.S);
  if (!report.ok()) {
    throw PreconditionError("chain family is not a Property A witness");
  }
  const InstanceParams& params = report.params;
  TailorPlan plan = classify(space, rips_components(space, params.S), params,
                             chains);
  AugmentedSpace aug = augment(space, plan.decomposition, params);
  FlowMap flow = build_flow(aug);

  const std::size_t n = space.size();
  Recomputed out;
  Certificate& cert = out.certificate;
  cert.L = params.L;
  cert.N = params.N;
  const Dist& S = params.S;
  const Rational L2(params.L * params.L);
  const Rational N(params.N);
  cert.case1_bound = S + S * L2;
  cert.case2_bound = Rational(6) * S + Rational(8) * S * N;
  cert.case3_bound = Rational(4) * S + Rational(6) * N * S;
  cert.bound_radius = std::max({cert.case1_bound, cert.case2_bound,
                                cert.case3_bound});
  out.subsets.resize(n);
  cert.cases.resize(n);
  cert.radii.resize(n);

  for (PointIndex x = 0; x < n; ++x) {
    const Component& c = plan.decomposition.component_containing(x);
    Chain flowed = stabilize(flow, chains[x]).chain;
    std::vector<AugPoint> support = flowed.support();
    out.subsets[x] = phi(plan, c.id, support);
    bool tail = std::any_of(support.begin(), support.end(),
                            [](AugPoint p) { return p.is_tail(); });
    switch (c.cls) {
      case ComponentClass::kUnboundedEmulated:
        cert.cases[x] = StepCase::kUnbounded;
        break;
      case ComponentClass::kBoundedSmall:
        cert.cases[x] = StepCase::kSmall;
        break;
      case ComponentClass::kBoundedLarge:
        cert.cases[x] = tail ? StepCase::kLargeTail : StepCase::kLargeInside;
        break;
    }
    Dist r(0);
    for (PointIndex y : out.subsets[x]) {
      Dist d = space.distance(x, y);
      if (d > r) r = d;
    }
    cert.radii[x] = r;
    if (r > cert.worst_radius) cert.worst_radius = r;
    const Dist& bound = c.cls == ComponentClass::kUnboundedEmulated
                            ? cert.case1_bound
                        : c.cls == ComponentClass::kBoundedSmall
                            ? cert.case2_bound
                            : cert.case3_bound;
    if (r > bound) {
      cert.violations.push_back("radius of A_" + space.id(x) + " is " +
                                r.to_string() + ", above the case bound " +
                                bound.to_string());
    }
  }

  for (PointIndex x = 0; x < n; ++x) {
    for (PointIndex y = x + 1; y < n; ++y) {
      if (space.distance(x, y) > params.R) continue;
      PairRecord rec{x, y, variation_ratio(chains[x], chains[y]),
                     set_ratio(out.subsets[x], out.subsets[y])};
      auto lx = plan.decomposition.component_containing(x);
      if (lx.cls == ComponentClass::kBoundedLarge &&
          (cert.cases[x] == StepCase::kLargeTail ||
           cert.cases[y] == StepCase::kLargeTail)) {
        ++cert.branch_3b_pairs;
      }
      if (rec.output > rec.input || !(rec.output < params.epsilon)) {
        cert.violations.push_back(
            "ratio of (" + space.id(x) + ", " + space.id(y) + ") is " +
            rec.output.to_string() + " against input " + rec.input.to_string());
      }
      cert.worst_ratio = std::max(cert.worst_ratio, rec.output);
      cert.input_worst_ratio = std::max(cert.input_worst_ratio, rec.input);
      cert.pairs.push_back(rec);
    }
  }
  return out;
}

template <typename T, typename Fmt>
bool differs(VerifyReport& report, const std::string& field, const T& expected,
             const T& found, Fmt fmt) {
  if (expected == found) return false;
  report.passed = false;
  report.violations.push_back("mismatch at " + field + ": expected " +
                              fmt(expected) + ", found " + fmt(found));
  return true;
}

std::string join_ids(const Space& space, const std::vector<PointIndex>& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += space.id(s[i]);
  }
  return out + "]";
}

}  // namespace

VerifyReport verify_naive(const Space& space, const SubsetFamily& subsets,
                          const Rational& R, const Rational& epsilon) {
  if (subsets.size() != space.size()) {
    throw MalformedInput("subset family has " + std::to_string(subsets.size()) +
                         " sets for " + std::to_string(space.size()) +
                         " points");
  }
  VerifyReport report;
  for (PointIndex x = 0; x < space.size(); ++x) {
    const auto& a = subsets[x];
    if (a.empty()) throw MalformedInput("A_" + space.id(x) + " is empty");
    if (!std::is_sorted(a.begin(), a.end()) ||
        std::adjacent_find(a.begin(), a.end()) != a.end()) {
      throw MalformedInput("A_" + space.id(x) + " is not a sorted set");
    }
    for (PointIndex y : a) {
      if (y >= space.size()) {
        throw MalformedInput("A_" + space.id(x) + " contains an unknown point");
      }
      report.support_radius = std::max(report.support_radius,
                                       space.distance(x, y));
    }
  }
  for (PointIndex x = 0; x < space.size(); ++x) {
    for (PointIndex y = x + 1; y < space.size(); ++y) {
      if (space.distance(x, y) > R) continue;
      Ratio r = set_ratio(subsets[x], subsets[y]);
      ++report.pairs_checked;
      report.worst_ratio = std::max(report.worst_ratio, r);
      if (!(r < epsilon)) {
        report.violations.push_back("|A_" + space.id(x) + " sym-diff A_" +
                                    space.id(y) + "| / |intersection| = " +
                                    r.to_string() + " is not < " +
                                    epsilon.to_string());
      }
    }
  }
  report.passed = report.violations.empty();
  return report;
}

VerifyReport verify_certificate(const Space& space, const ChainFamily& chains,
                                const InstanceParams& params,
                                const SubsetFamily& subsets,
                                const Certificate& given) {
  Recomputed re = recompute(space, chains, params);
  const Certificate& want = re.certificate;
  VerifyReport report;
  report.passed = true;
  report.worst_ratio = want.worst_ratio;
  report.support_radius = want.worst_radius;
  report.pairs_checked = want.pairs.size();

  auto num = [](std::int64_t v) { return std::to_string(v); };
  auto rat = [](const Rational& r) { return r.to_string(); };
  auto ratio = [](const Ratio& r) { return r.to_string(); };
  auto cnt = [](std::uint64_t v) { return std::to_string(v); };
  auto sc = [](StepCase c) { return std::string(to_string(c)); };
  auto ids = [&](const std::vector<PointIndex>& s) { return join_ids(space, s); };

  if (subsets.size() != space.size()) {
    differs(report, "subsets.size", space.size(), subsets.size(), cnt);
    return report;
  }
  for (PointIndex x = 0; x < space.size(); ++x) {
    if (differs(report, "subsets[" + space.id(x) + "]", re.subsets[x],
                subsets[x], ids)) {
      return report;
    }
  }
  if (differs(report, "certificate.L", want.L, given.L, num) ||
      differs(report, "certificate.N", want.N, given.N, num) ||
      differs(report, "certificate.bounds.case1", want.case1_bound,
              given.case1_bound, rat) ||
      differs(report, "certificate.bounds.case2", want.case2_bound,
              given.case2_bound, rat) ||
      differs(report, "certificate.bounds.case3", want.case3_bound,
              given.case3_bound, rat) ||
      differs(report, "certificate.bound_radius", want.bound_radius,
              given.bound_radius, rat)) {
    return report;
  }
  if (given.cases.size() != space.size() || given.radii.size() != space.size()) {
    differs(report, "certificate.cases.size", space.size(),
            std::min(given.cases.size(), given.radii.size()), cnt);
    return report;
  }
  for (PointIndex x = 0; x < space.size(); ++x) {
    if (differs(report, "certificate.cases[" + space.id(x) + "]",
                want.cases[x], given.cases[x], sc) ||
        differs(report, "certificate.radii[" + space.id(x) + "]",
                want.radii[x], given.radii[x], rat)) {
      return report;
    }
  }
  if (differs(report, "certificate.pairs.size", want.pairs.size(),
              given.pairs.size(), cnt)) {
    return report;
  }
  for (std::size_t i = 0; i < want.pairs.size(); ++i) {
    const auto& w = want.pairs[i];
    const auto& g = given.pairs[i];
    std::string at = "certificate.pairs[" + std::to_string(i) + "] (" +
                     space.id(w.x) + ", " + space.id(w.y) + ")";
    if (differs(report, at + ".x", space.id(w.x), space.id(g.x),
                [](const std::string& s) { return s; }) ||
        differs(report, at + ".y", space.id(w.y), space.id(g.y),
                [](const std::string& s) { return s; }) ||
        differs(report, at + ".input_ratio", w.input, g.input, ratio) ||
        differs(report, at + ".output_ratio", w.output, g.output, ratio)) {
      return report;
    }
  }
  if (differs(report, "certificate.worst_ratio", want.worst_ratio,
              given.worst_ratio, ratio) ||
      differs(report, "certificate.input_worst_ratio", want.input_worst_ratio,
              given.input_worst_ratio, ratio) ||
      differs(report, "certificate.worst_radius", want.worst_radius,
              given.worst_radius, rat) ||
      differs(report, "certificate.branch_3b_pairs", want.branch_3b_pairs,
              given.branch_3b_pairs, cnt) ||
      differs(report, "certificate.violations.size", want.violations.size(),
              given.violations.size(), cnt)) {
    return report;
  }
  for (std::size_t i = 0; i < want.violations.size(); ++i) {
    if (differs(report, "certificate.violations[" + std::to_string(i) + "]",
                want.violations[i], given.violations[i],
                [](const std::string& s) { return s; })) {
      return report;
    }
  }
  // A certificate that matches but records failed guarantees is not a pass.
  if (!want.violations.empty()) {
    report.passed = false;
    report.violations = want.violations;
  }
  return report;
}

MonitorReport flow_monitor(const MonitorSpec& spec) {
  if (spec.points == 0) throw PreconditionError("monitor needs >= 1 point");
  // Total mass is at most points * max_value and every token moves at most
  // that many steps before settling, so a path of this length never spills.
  const std::size_t length = spec.points + spec.points * spec.max_value + 2;
  std::vector<std::optional<AugPoint>> succ(length);
  for (std::size_t i = 0; i + 1 < length; ++i) {
    succ[i] = AugPoint::base(static_cast<PointIndex>(i + 1));
  }
  const FlowMap flow(std::move(succ), 0);

  std::vector<Chain> all;
  std::vector<Count> digits(spec.points, 0);
  for (;;) {
    Chain c;
    for (std::size_t i = 0; i < spec.points; ++i) {
      c.add(AugPoint::base(static_cast<PointIndex>(i)), digits[i]);
    }
    all.push_back(std::move(c));
    std::size_t k = 0;
    while (k < spec.points && digits[k] == spec.max_value) digits[k++] = 0;
    if (k == spec.points) break;
    ++digits[k];
  }

  MonitorReport report;
  auto fail = [&](const std::string& what, const Chain& a,
                  const Chain* b = nullptr) {
    report.passed = false;
    if (report.failures.size() >= 20) return;
    auto show = [](const Chain& c) {
      std::ostringstream os;
      os << "{";
      bool first = true;
      for (const auto& [p, v] : c) {
        os << (first ? "" : ",") << "p" << p.point() << ":" << v;
        first = false;
      }
      os << "}";
      return os.str();
    };
    report.failures.push_back(what + " at a=" + show(a) +
                              (b ? " b=" + show(*b) : std::string()));
  };

  std::vector<Chain> one_step(all.size());
  std::vector<Chain> limit(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Chain& a = all[i];
    ++report.chains;
    Chain s1 = step(flow, a);
    one_step[i] = s1;
    if (l1_norm(s1) != l1_norm(a)) fail("l1 norm not preserved", a);
    auto [b, t] = split(a);
    if (t.empty() != (s1 == a)) fail("fixed point law", a);
    for (const auto& [p, v] : s1) {
      bool from_support = a.at(p) > 0;
      bool from_sigma = p.point() > 0 &&
                        a.at(AugPoint::base(p.point() - 1)) > 0;
      if (!from_support && !from_sigma) fail("support drift", a);
    }
    if (a.empty()) continue;
    Stabilized st = stabilize(flow, a);
    report.max_iterations = std::max(report.max_iterations, st.iterations);
    if (st.iterations > st.bound) fail("stabilization bound", a);
    if (st.chain.support_size() != l1_norm(a)) fail("support size", a);
    limit[i] = std::move(st.chain);
  }

  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      const Chain& a = all[i];
      const Chain& b = all[j];
      ++report.pairs;
      if (pointwise_leq(a, b) && !pointwise_leq(one_step[i], one_step[j])) {
        fail("monotonicity", a, &b);
      }
      if (l1_norm(meet(one_step[i], one_step[j])) < l1_norm(meet(a, b))) {
        fail("meet growth", a, &b);
      }
      if (l1_distance(one_step[i], one_step[j]) > l1_distance(a, b)) {
        fail("difference contraction", a, &b);
      }
      if (!a.empty() && !b.empty() &&
          variation_ratio(limit[i], limit[j]) > variation_ratio(a, b)) {
        fail("ratio contraction", a, &b);
      }
    }
  }
  return report;
}

}  // namespace naive_a
