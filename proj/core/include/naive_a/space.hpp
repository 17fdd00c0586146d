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

#ifndef NAIVE_A_SPACE_HPP_
#define NAIVE_A_SPACE_HPP_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "naive_a/rational.hpp"

namespace naive_a {

using PointId = std::string;

// Position of a point in the lexicographic order of its id. Every container
// indexed by PointIndex follows that order, so index order is id order.
using PointIndex = std::uint32_t;

// Exact distance oracle over point indices. Implementations must be
// symmetric, zero on the diagonal and safe for concurrent reads.
class MetricOracle {
 public:
  virtual ~MetricOracle() = default;
  virtual Dist distance(PointIndex a, PointIndex b) const = 0;
};

// Closed-form description of a generated metric, kept so an instance can be
// written back in compact form.
struct GeneratorSpec {
  std::string kind;
  std::map<std::string, std::string> params;

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

// Marks the component containing `component_of` as an emulated unbounded
// component. ray.front() becomes the component basepoint.
struct UnboundedHint {
  PointId component_of;
  std::vector<PointId> ray;

  friend bool operator==(const UnboundedHint&, const UnboundedHint&) = default;
};

struct WeightedEdge {
  PointId a;
  PointId b;
  Dist weight;
};

// A finite metric space with exact rational distances. Immutable once
// built; copies share the distance oracle.
class Space {
 public:
  // rows[i][j] is the distance between ids[i] and ids[j]. Validates the
  // metric axioms exhaustively.
  static Space from_matrix(std::vector<PointId> ids,
                           const std::vector<std::vector<Dist>>& rows);

  // Distances are shortest-path lengths. The graph must be connected and
  // every edge weight positive.
  static Space from_graph(std::vector<PointId> ids,
                          const std::vector<WeightedEdge>& edges);

  // `ids` must already be sorted and unique; the oracle is indexed in that
  // order. Validation is exhaustive and cubic, so callers may skip it for
  // closed-form metrics.
  static Space from_oracle(std::vector<PointId> ids,
                           std::shared_ptr<const MetricOracle> oracle,
                           std::optional<GeneratorSpec> generator,
                           bool validate);

  std::size_t size() const { return ids_.size(); }
  const PointId& id(PointIndex i) const { return ids_[i]; }
  std::span<const PointId> ids() const { return ids_; }

  // Throws UnknownPoint.
  PointIndex index_of(std::string_view id) const;
  std::optional<PointIndex> find(std::string_view id) const;

  Dist distance(PointIndex a, PointIndex b) const {
    return oracle_->distance(a, b);
  }

  const std::optional<GeneratorSpec>& generator() const { return generator_; }

  const std::vector<UnboundedHint>& hints() const { return hints_; }
  // Hint ids are checked against the point set.
  void set_hints(std::vector<UnboundedHint> hints);

 private:
  Space() = default;

  std::vector<PointId> ids_;
  std::unordered_map<std::string, PointIndex> index_;
  std::shared_ptr<const MetricOracle> oracle_;
  std::optional<GeneratorSpec> generator_;
  std::vector<UnboundedHint> hints_;
};

// Checks positivity, symmetry and the triangle inequality over all pairs
// and triples. Throws MetricAxiomError naming the offending pair or triple.
void validate_metric(const Space& space);

// Closed ball {y : d(x, y) <= r}, in index order.
std::vector<PointIndex> ball(const Space& space, PointIndex x, const Dist& r);

// max_x |ball(x, r)|.
std::size_t growth_profile(const Space& space, const Dist& r);

// Dense distance table; the backing store for matrix and graph sources.
class DenseMetric final : public MetricOracle {
 public:
  DenseMetric(std::size_t n, std::vector<Dist> table)
      : n_(n), table_(std::move(table)) {}
  Dist distance(PointIndex a, PointIndex b) const override {
    return table_[static_cast<std::size_t>(a) * n_ + b];
  }

 private:
  std::size_t n_;
  std::vector<Dist> table_;
};

}  // namespace naive_a

#endif  // NAIVE_A_SPACE_HPP_
