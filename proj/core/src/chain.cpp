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

#include "naive_a/chain.hpp"

#include <limits>
#include <set>

#include "naive_a/errors.hpp"

namespace naive_a {

AugPoint AugPoint::tail(ComponentId lambda, std::uint32_t j) {
  if (j == 0) {
    throw InvariantViolation(
        "tail index 0 is the component basepoint; use AugPoint::base");
  }
  return AugPoint(lambda, j);
}

Chain::Chain(std::initializer_list<std::pair<const AugPoint, Count>> init) {
  for (const auto& [p, v] : init) add(p, v);
}

Count Chain::at(AugPoint p) const {
  auto it = entries_.find(p);
  return it == entries_.end() ? 0 : it->second;
}

void Chain::add(AugPoint p, Count v) {
  if (v == 0) return;
  entries_[p] += v;
}

void Chain::set(AugPoint p, Count v) {
  if (v == 0) {
    entries_.erase(p);
  } else {
    entries_[p] = v;
  }
}

std::vector<AugPoint> Chain::support() const {
  std::vector<AugPoint> out;
  out.reserve(entries_.size());
  for (const auto& [p, v] : entries_) out.push_back(p);
  return out;
}

bool Chain::is_indicator() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const auto& e) { return e.second == 1; });
}

bool Chain::base_only() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const auto& e) { return e.first.is_base(); });
}

Chain base_chain(std::initializer_list<std::pair<PointIndex, Count>> entries) {
  Chain c;
  for (const auto& [p, v] : entries) c.add(AugPoint::base(p), v);
  return c;
}

Count l1_norm(const Chain& a) {
  Count total = 0;
  for (const auto& [p, v] : a) total += v;
  return total;
}

Chain meet(const Chain& a, const Chain& b) {
  Chain out;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->first < j->first) {
      ++i;
    } else if (j->first < i->first) {
      ++j;
    } else {
      out.add(i->first, std::min(i->second, j->second));
      ++i;
      ++j;
    }
  }
  return out;
}

Count l1_distance(const Chain& a, const Chain& b) {
  Count total = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      total += i->second;
      ++i;
    } else if (i == a.end() || j->first < i->first) {
      total += j->second;
      ++j;
    } else {
      total += i->second > j->second ? i->second - j->second
                                     : j->second - i->second;
      ++i;
      ++j;
    }
  }
  return total;
}

bool pointwise_leq(const Chain& a, const Chain& b) {
  for (const auto& [p, v] : a) {
    if (v > b.at(p)) return false;
  }
  return true;
}

Ratio::Ratio(Rational value) : value_(value) {
  if (value.is_negative()) throw InvariantViolation("negative ratio");
}

Ratio Ratio::infinite() {
  Ratio r;
  r.infinite_ = true;
  return r;
}

Ratio Ratio::of(Count num, Count den) {
  if (den == 0) return num == 0 ? Ratio() : infinite();
  constexpr Count kMax = std::numeric_limits<std::int64_t>::max();
  if (num > kMax || den > kMax) throw OverflowError("ratio overflow");
  return Ratio(Rational(static_cast<std::int64_t>(num),
                        static_cast<std::int64_t>(den)));
}

Ratio Ratio::parse(std::string_view text) {
  if (text == "inf") return infinite();
  Rational r = Rational::parse(text);
  if (r.is_negative()) {
    throw MalformedInput("negative ratio '" + std::string(text) + "'");
  }
  return Ratio(r);
}

std::string Ratio::to_string() const {
  return infinite_ ? "inf" : value_.to_string();
}

std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
  return a.value_ <=> b.value_;
}

Ratio variation_ratio(const Chain& a, const Chain& b) {
  return Ratio::of(l1_distance(a, b), l1_norm(meet(a, b)));
}

ChainFamily from_sets(const SetFamily& sf) {
  if (sf.multiplicity_bound < 1) {
    throw MalformedInput("multiplicity bound must be >= 1");
  }
  ChainFamily out(sf.sets.size());
  for (std::size_t x = 0; x < sf.sets.size(); ++x) {
    const auto& set = sf.sets[x];
    if (set.empty()) {
      throw MalformedInput("set A_x for point #" + std::to_string(x) +
                           " is empty");
    }
    std::set<std::pair<PointIndex, std::uint32_t>> seen;
    for (const auto& [z, level] : set) {
      if (level >= sf.multiplicity_bound) {
        throw MalformedInput("level " + std::to_string(level) +
                             " is not below the multiplicity bound " +
                             std::to_string(sf.multiplicity_bound));
      }
      if (!seen.emplace(z, level).second) {
        throw MalformedInput("set A_x for point #" + std::to_string(x) +
                             " repeats an element");
      }
      out[x].add(AugPoint::base(z), 1);
    }
  }
  return out;
}

void InstanceParams::set_mass_bound(std::int64_t l) {
  if (l < 1) throw InvariantViolation("mass bound L must be >= 1");
  L = l;
  N = l * l + 2;
}

Dist InstanceParams::flow_radius() const { return S + S * Rational(L * L); }
Dist InstanceParams::small_radius() const {
  return Rational(6) * S + Rational(8) * S * Rational(N);
}
Dist InstanceParams::large_radius() const {
  return Rational(4) * S + Rational(6) * Rational(N) * S;
}
Dist InstanceParams::annulus_inner() const {
  return Rational(3) * S + Rational(3) * S * Rational(N);
}
Dist InstanceParams::annulus_outer() const {
  return Rational(3) * S + Rational(4) * S * Rational(N);
}
Dist InstanceParams::locality_radius() const {
  return S + Rational(2) * Rational(N) * S;
}

std::vector<std::pair<PointIndex, PointIndex>> close_pairs(const Space& space,
                                                           const Rational& R) {
  std::vector<std::pair<PointIndex, PointIndex>> out;
  for (PointIndex x = 0; x < space.size(); ++x) {
    for (PointIndex y = x + 1; y < space.size(); ++y) {
      if (space.distance(x, y) <= R) out.emplace_back(x, y);
    }
  }
  return out;
}

InstanceReport check_instance(const Space& space, const ChainFamily& chains,
                              const Rational& R, const Rational& epsilon,
                              const Dist& S) {
  if (!R.is_positive()) throw PreconditionError("R must be > 0");
  if (!epsilon.is_positive()) throw PreconditionError("epsilon must be > 0");
  if (S <= R) {
    throw PreconditionError("assumption S > R violated: S = " + S.to_string() +
                            ", R = " + R.to_string());
  }
  if (chains.size() != space.size()) {
    throw MalformedInput("chain family has " + std::to_string(chains.size()) +
                         " chains for " + std::to_string(space.size()) +
                         " points");
  }

  InstanceReport report;
  report.params.R = R;
  report.params.epsilon = epsilon;
  report.params.S = S;

  Count max_mass = 0;
  for (PointIndex x = 0; x < space.size(); ++x) {
    const Chain& a = chains[x];
    if (a.empty()) {
      throw PreconditionError("chain a_" + space.id(x) + " is empty");
    }
    for (const auto& [z, v] : a) {
      if (!z.is_base() || z.point() >= space.size()) {
        throw MalformedInput("chain a_" + space.id(x) +
                             " is supported outside the space");
      }
      Dist d = space.distance(x, z.point());
      if (d > S) report.support_violations.push_back({x, z.point(), d});
    }
    max_mass = std::max(max_mass, l1_norm(a));
  }

  for (const auto& [x, y] : close_pairs(space, R)) {
    Ratio r = variation_ratio(chains[x], chains[y]);
    ++report.pairs_checked;
    report.worst_ratio = std::max(report.worst_ratio, r);
    if (!(r < epsilon)) report.ratio_violations.push_back({x, y, r});
  }

  report.params.set_mass_bound(static_cast<std::int64_t>(max_mass) + 1);
  return report;
}

}  // namespace naive_a
