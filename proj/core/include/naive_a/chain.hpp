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

#ifndef NAIVE_A_CHAIN_HPP_
#define NAIVE_A_CHAIN_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "naive_a/decomposition.hpp"
#include "naive_a/rational.hpp"
#include "naive_a/space.hpp"

namespace naive_a {

// A point of the augmented space: either a base point of X or the j-th tail
// point (j >= 1) attached to component lambda. The tail point of index 0 is
// the component basepoint itself and is always represented as a base point.
class AugPoint {
 public:
  constexpr AugPoint() = default;

  static constexpr AugPoint base(PointIndex p) { return AugPoint(p, 0); }
  static AugPoint tail(ComponentId lambda, std::uint32_t j);

  constexpr bool is_base() const { return index_ == 0; }
  constexpr bool is_tail() const { return index_ != 0; }
  constexpr PointIndex point() const { return key_; }
  constexpr ComponentId component() const { return key_; }
  // Tail index j; 0 for base points.
  constexpr std::uint32_t index() const { return index_; }

  // Base points precede tail points; tails are ordered by (lambda, j).
  friend constexpr std::strong_ordering operator<=>(AugPoint a, AugPoint b) {
    if (auto c = a.is_tail() <=> b.is_tail(); c != 0) return c;
    if (auto c = a.key_ <=> b.key_; c != 0) return c;
    return a.index_ <=> b.index_;
  }
  friend constexpr bool operator==(AugPoint a, AugPoint b) = default;

 private:
  constexpr AugPoint(std::uint32_t key, std::uint32_t index)
      : key_(key), index_(index) {}

  std::uint32_t key_ = 0;
  std::uint32_t index_ = 0;
};

using Count = std::uint64_t;

// Finitely supported N-valued 0-chain. Zero entries are never stored.
class Chain {
 public:
  using Map = std::map<AugPoint, Count>;
  using const_iterator = Map::const_iterator;

  Chain() = default;
  Chain(std::initializer_list<std::pair<const AugPoint, Count>> init);

  Count at(AugPoint p) const;
  void add(AugPoint p, Count v);
  void set(AugPoint p, Count v);

  bool empty() const { return entries_.empty(); }
  std::size_t support_size() const { return entries_.size(); }
  std::vector<AugPoint> support() const;
  bool is_indicator() const;
  bool base_only() const;

  const_iterator begin() const { return entries_.begin(); }
  const_iterator end() const { return entries_.end(); }

  friend bool operator==(const Chain&, const Chain&) = default;

 private:
  Map entries_;
};

// Convenience for chains on base points only.
Chain base_chain(std::initializer_list<std::pair<PointIndex, Count>> entries);

Count l1_norm(const Chain& a);
Chain meet(const Chain& a, const Chain& b);
// sum_x |a(x) - b(x)|
Count l1_distance(const Chain& a, const Chain& b);
// a(x) <= b(x) for every x.
bool pointwise_leq(const Chain& a, const Chain& b);

// A nonnegative rational or +infinity; used for variation ratios, where an
// empty meet between distinct chains gives an infinite ratio.
class Ratio {
 public:
  Ratio() = default;
  explicit Ratio(Rational value);
  static Ratio infinite();
  // num/den, with num/0 = infinite for num > 0 and 0/0 = 0.
  static Ratio of(Count num, Count den);
  static Ratio parse(std::string_view text);

  bool is_infinite() const { return infinite_; }
  const Rational& value() const { return value_; }
  // "inf" or the rational literal.
  std::string to_string() const;

  friend bool operator==(const Ratio&, const Ratio&) = default;
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b);
  friend bool operator<(const Ratio& a, const Rational& b) {
    return !a.infinite_ && a.value_ < b;
  }

 private:
  bool infinite_ = false;
  Rational value_;
};

// ||a - b||_1 / ||a ^ b||_1.
Ratio variation_ratio(const Chain& a, const Chain& b);

// |A symmetric-difference B| / |A intersect B| for sorted, duplicate-free ranges.
template <typename T>
Ratio set_ratio(std::span<const T> a, std::span<const T> b) {
  Count common = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  Count sym = a.size() + b.size() - 2 * common;
  return Ratio::of(sym, common);
}

template <typename T>
Ratio set_ratio(const std::vector<T>& a, const std::vector<T>& b) {
  return set_ratio(std::span<const T>(a), std::span<const T>(b));
}

// A Property A witness in X x {0..M-1}: sets[x] lists (point, level) pairs.
struct SetFamily {
  std::vector<std::vector<std::pair<PointIndex, std::uint32_t>>> sets;
  std::uint32_t multiplicity_bound = 1;
};

// chains[x] is a_x. Supports lie in X.
using ChainFamily = std::vector<Chain>;

// a_x(z) = |A_x cap ({z} x N)|. Throws MalformedInput on an empty set, a
// level at or above the multiplicity bound, or a repeated element.
ChainFamily from_sets(const SetFamily& sf);

// Scale parameters of an instance. L and N are derived by check_instance.
struct InstanceParams {
  Rational R;
  Rational epsilon;
  Dist S;
  std::int64_t L = 0;
  std::int64_t N = 0;

  // Sets L and N := L^2 + 2.
  void set_mass_bound(std::int64_t l);

  Dist flow_radius() const;      // S + S L^2
  Dist small_radius() const;     // 6S + 8SN
  Dist large_radius() const;     // 4S + 6NS
  Dist bound_radius() const { return small_radius(); }
  Dist annulus_inner() const;    // 3S + 3SN
  Dist annulus_outer() const;    // 3S + 4SN
  Dist locality_radius() const;  // S + 2NS
};

struct PairViolation {
  PointIndex x = 0;
  PointIndex y = 0;
  Ratio ratio;
};

struct SupportViolation {
  PointIndex x = 0;
  PointIndex z = 0;  // support point with d(x, z) > S
  Dist distance;
};

struct InstanceReport {
  InstanceParams params;
  std::vector<PairViolation> ratio_violations;    // condition (i)
  std::vector<SupportViolation> support_violations;  // condition (ii)
  std::size_t pairs_checked = 0;
  Ratio worst_ratio;

  bool ok() const {
    return ratio_violations.empty() && support_violations.empty();
  }
};

// Checks the chain conditions: variation ratio below epsilon for every pair
// at distance <= R, supp(a_x) within ball(x, S), and derives
// L := 1 + max ||a_x||_1. Throws PreconditionError when S <= R, epsilon <= 0
// or a chain is empty, and MalformedInput when the family does not match the
// space.
InstanceReport check_instance(const Space& space, const ChainFamily& chains,
                              const Rational& R, const Rational& epsilon,
                              const Dist& S);

// Pairs {x < y} with d(x, y) <= R, in lexicographic order.
std::vector<std::pair<PointIndex, PointIndex>> close_pairs(const Space& space,
                                                           const Rational& R);

}  // namespace naive_a

#endif  // NAIVE_A_CHAIN_HPP_
