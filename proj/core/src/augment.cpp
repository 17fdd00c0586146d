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

#include "naive_a/augment.hpp"

#include "naive_a/errors.hpp"

namespace naive_a {

AugmentedSpace::AugmentedSpace(Space base, Decomposition decomposition,
                               InstanceParams params, std::uint32_t tail_cap)
    : base_(std::move(base)),
      decomposition_(std::move(decomposition)),
      params_(std::move(params)),
      tail_cap_(tail_cap) {
  if (decomposition_.component_of.size() != base_.size()) {
    throw InvariantViolation("decomposition does not match the space");
  }
  if (decomposition_.scale != params_.S) {
    throw InvariantViolation("decomposition scale differs from S");
  }
}

bool AugmentedSpace::has_tail(ComponentId lambda) const {
  if (lambda >= decomposition_.components.size()) {
    throw MalformedInput("unknown component " + std::to_string(lambda));
  }
  return decomposition_.components[lambda].has_tail();
}

void AugmentedSpace::check(AugPoint p) const {
  if (p.is_base()) {
    if (p.point() >= base_.size()) {
      throw InvariantViolation("base point index out of range");
    }
    return;
  }
  if (!has_tail(p.component())) {
    throw InvariantViolation("component " + std::to_string(p.component()) +
                             " has no tail");
  }
  if (p.index() > tail_cap_) {
    throw InvariantViolation("tail point " + label(p) +
                             " lies beyond the materialized window (cap " +
                             std::to_string(tail_cap_) + ")");
  }
}

ComponentId AugmentedSpace::component_of(AugPoint p) const {
  return p.is_base() ? decomposition_.component_of[p.point()] : p.component();
}

Dist AugmentedSpace::leg(AugPoint tail) const {
  return Rational(tail.index()) * params_.S;
}

Dist AugmentedSpace::dist(AugPoint u, AugPoint v) const {
  check(u);
  check(v);
  if (u == v) return Dist(0);
  if (u.is_base() && v.is_base()) return base_.distance(u.point(), v.point());
  if (u.is_tail() && v.is_tail() && u.component() == v.component()) {
    std::uint32_t i = u.index();
    std::uint32_t j = v.index();
    return Rational(i > j ? i - j : j - i) * params_.S;
  }
  auto anchor = [&](AugPoint p) {
    return p.is_base() ? p.point()
                       : decomposition_.components[p.component()].basepoint;
  };
  Dist total = base_.distance(anchor(u), anchor(v));
  if (u.is_tail()) total += leg(u);
  if (v.is_tail()) total += leg(v);
  return total;
}

std::vector<AugPoint> AugmentedSpace::truncate(ComponentId lambda) const {
  bool tail = has_tail(lambda);
  std::vector<AugPoint> out;
  for (PointIndex p : decomposition_.components[lambda].points) {
    out.push_back(AugPoint::base(p));
  }
  if (tail) {
    for (std::uint32_t j = 1; j <= tail_cap_; ++j) {
      out.push_back(AugPoint::tail(lambda, j));
    }
  }
  return out;
}

std::vector<AugPoint> AugmentedSpace::materialized() const {
  std::vector<AugPoint> out;
  for (PointIndex p = 0; p < base_.size(); ++p) out.push_back(AugPoint::base(p));
  for (const auto& c : decomposition_.components) {
    if (!c.has_tail()) continue;
    for (std::uint32_t j = 1; j <= tail_cap_; ++j) {
      out.push_back(AugPoint::tail(c.id, j));
    }
  }
  return out;
}

std::string AugmentedSpace::label(AugPoint p) const {
  if (p.is_base()) return base_.id(p.point());
  return std::to_string(p.component()) + "#" + std::to_string(p.index());
}

AugmentedSpace augment(const Space& space, const Decomposition& decomposition,
                       const InstanceParams& params) {
  if (params.N < 1) throw InvariantViolation("N must be set before augmenting");
  return AugmentedSpace(space, decomposition, params,
                        static_cast<std::uint32_t>(params.N));
}

}  // namespace naive_a
