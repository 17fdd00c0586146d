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

#include "naive_a/space.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <utility>

#include "naive_a/errors.hpp"

namespace naive_a {
namespace {

void check_unique_sorted(const std::vector<PointId>& ids) {
  for (std::size_t i = 1; i < ids.size(); ++i) {
    if (ids[i - 1] == ids[i]) {
      throw MalformedInput("duplicate point id '" + ids[i] + "'");
    }
  }
}

// Sorts ids and returns, for each sorted position, the original position.
std::vector<std::size_t> sort_ids(std::vector<PointId>& ids) {
  std::vector<std::size_t> perm(ids.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(),
            [&](std::size_t a, std::size_t b) { return ids[a] < ids[b]; });
  std::vector<PointId> sorted;
  sorted.reserve(ids.size());
  for (std::size_t p : perm) sorted.push_back(std::move(ids[p]));
  ids = std::move(sorted);
  check_unique_sorted(ids);
  return perm;
}

}  // namespace

Space Space::from_oracle(std::vector<PointId> ids,
                         std::shared_ptr<const MetricOracle> oracle,
                         std::optional<GeneratorSpec> generator,
                         bool validate) {
  if (ids.empty()) throw MalformedInput("a space needs at least one point");
  if (!std::is_sorted(ids.begin(), ids.end())) {
    throw MalformedInput("oracle-backed spaces need sorted ids");
  }
  check_unique_sorted(ids);
  Space s;
  s.ids_ = std::move(ids);
  s.index_.reserve(s.ids_.size());
  for (std::size_t i = 0; i < s.ids_.size(); ++i) {
    s.index_.emplace(s.ids_[i], static_cast<PointIndex>(i));
  }
  s.oracle_ = std::move(oracle);
  s.generator_ = std::move(generator);
  if (validate) validate_metric(s);
  return s;
}

Space Space::from_matrix(std::vector<PointId> ids,
                         const std::vector<std::vector<Dist>>& rows) {
  const std::size_t n = ids.size();
  if (rows.size() != n) {
    throw MalformedInput("distance matrix has " + std::to_string(rows.size()) +
                         " rows for " + std::to_string(n) + " points");
  }
  for (const auto& row : rows) {
    if (row.size() != n) throw MalformedInput("distance matrix is not square");
  }
  auto perm = sort_ids(ids);
  std::vector<Dist> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Dist& d = rows[perm[i]][perm[j]];
      if (d.is_negative()) {
        throw MetricAxiomError("negative distance between '" + ids[i] +
                               "' and '" + ids[j] + "'");
      }
      table[i * n + j] = d;
    }
  }
  return from_oracle(std::move(ids),
                     std::make_shared<DenseMetric>(n, std::move(table)),
                     std::nullopt, /*validate=*/true);
}

Space Space::from_graph(std::vector<PointId> ids,
                        const std::vector<WeightedEdge>& edges) {
  sort_ids(ids);
  const std::size_t n = ids.size();
  if (n == 0) throw MalformedInput("a space needs at least one point");
  auto lookup = [&](const PointId& id) {
    auto it = std::lower_bound(ids.begin(), ids.end(), id);
    if (it == ids.end() || *it != id) throw UnknownPoint(id);
    return static_cast<std::size_t>(it - ids.begin());
  };
  std::vector<std::vector<std::pair<std::size_t, Dist>>> adj(n);
  for (const auto& e : edges) {
    if (!e.weight.is_positive()) {
      throw MetricAxiomError("edge '" + e.a + "'-'" + e.b +
                             "' has non-positive weight " +
                             e.weight.to_string());
    }
    std::size_t a = lookup(e.a);
    std::size_t b = lookup(e.b);
    adj[a].emplace_back(b, e.weight);
    adj[b].emplace_back(a, e.weight);
  }

  std::vector<Dist> table(n * n);
  using Entry = std::pair<Dist, std::size_t>;
  for (std::size_t src = 0; src < n; ++src) {
    std::vector<std::optional<Dist>> dist(n);
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    dist[src] = Dist(0);
    pq.emplace(Dist(0), src);
    while (!pq.empty()) {
      auto [d, u] = pq.top();
      pq.pop();
      if (d > *dist[u]) continue;
      for (const auto& [v, w] : adj[u]) {
        Dist nd = d + w;
        if (!dist[v] || nd < *dist[v]) {
          dist[v] = nd;
          pq.emplace(nd, v);
        }
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (!dist[v]) {
        throw MalformedInput("graph is disconnected: no path from '" +
                             ids[src] + "' to '" + ids[v] +
                             "' (all distances must be finite)");
      }
      table[src * n + v] = *dist[v];
    }
  }
  // Shortest-path distances satisfy the axioms by construction.
  return from_oracle(std::move(ids),
                     std::make_shared<DenseMetric>(n, std::move(table)),
                     std::nullopt, /*validate=*/false);
}

PointIndex Space::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) throw UnknownPoint(std::string(id));
  return it->second;
}

std::optional<PointIndex> Space::find(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void Space::set_hints(std::vector<UnboundedHint> hints) {
  for (const auto& h : hints) {
    index_of(h.component_of);
    if (h.ray.empty()) {
      throw MalformedInput("unbounded hint for '" + h.component_of +
                           "' has an empty ray");
    }
    for (const auto& r : h.ray) index_of(r);
  }
  hints_ = std::move(hints);
}

void validate_metric(const Space& space) {
  const std::size_t n = space.size();
  for (PointIndex i = 0; i < n; ++i) {
    if (!space.distance(i, i).is_zero()) {
      throw MetricAxiomError("d(" + space.id(i) + "," + space.id(i) +
                             ") is not zero");
    }
    for (PointIndex j = i + 1; j < n; ++j) {
      Dist dij = space.distance(i, j);
      if (!dij.is_positive()) {
        throw MetricAxiomError("d(" + space.id(i) + "," + space.id(j) +
                               ") = " + dij.to_string() +
                               " but distinct points need positive distance");
      }
      if (dij != space.distance(j, i)) {
        throw MetricAxiomError("asymmetric distance between '" + space.id(i) +
                               "' and '" + space.id(j) + "'");
      }
    }
  }
  for (PointIndex a = 0; a < n; ++a) {
    for (PointIndex c = a + 1; c < n; ++c) {
      Dist dac = space.distance(a, c);
      for (PointIndex b = 0; b < n; ++b) {
        if (b == a || b == c) continue;
        if (dac > space.distance(a, b) + space.distance(b, c)) {
          throw MetricAxiomError(
              "triangle inequality violated: d(" + space.id(a) + "," +
              space.id(c) + ") = " + dac.to_string() + " > d(" + space.id(a) +
              "," + space.id(b) + ") + d(" + space.id(b) + "," + space.id(c) +
              ") = " + (space.distance(a, b) + space.distance(b, c)).to_string());
        }
      }
    }
  }
}

std::vector<PointIndex> ball(const Space& space, PointIndex x, const Dist& r) {
  if (x >= space.size()) throw MalformedInput("point index out of range");
  std::vector<PointIndex> out;
  for (PointIndex y = 0; y < space.size(); ++y) {
    if (space.distance(x, y) <= r) out.push_back(y);
  }
  return out;
}

std::size_t growth_profile(const Space& space, const Dist& r) {
  std::size_t best = 0;
  for (PointIndex x = 0; x < space.size(); ++x) {
    std::size_t count = 0;
    for (PointIndex y = 0; y < space.size(); ++y) {
      if (space.distance(x, y) <= r) ++count;
    }
    best = std::max(best, count);
  }
  return best;
}

}  // namespace naive_a
