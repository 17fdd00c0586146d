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

#include "naive_a/generators.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <deque>
#include <limits>
#include <numeric>
#include <random>

#include "naive_a/errors.hpp"

namespace naive_a {
namespace {

using Coord = std::array<std::int64_t, 2>;

// Points embedded in Z^2 with the l1 distance. Lines, unions of paths laid
// out along one axis, and grid graphs all have this form.
class CoordinateMetric final : public MetricOracle {
 public:
  explicit CoordinateMetric(std::vector<Coord> coords)
      : coords_(std::move(coords)) {}
  Dist distance(PointIndex a, PointIndex b) const override {
    const Coord& p = coords_[a];
    const Coord& q = coords_[b];
    return Dist(std::abs(p[0] - q[0]) + std::abs(p[1] - q[1]));
  }

 private:
  std::vector<Coord> coords_;
};

// Word metric on Z/nZ: d(a, b) = |b - a| for the word length |.|.
class CyclicWordMetric final : public MetricOracle {
 public:
  CyclicWordMetric(std::vector<std::int64_t> element,
                   std::vector<std::int64_t> word_length)
      : element_(std::move(element)), word_length_(std::move(word_length)) {}
  Dist distance(PointIndex a, PointIndex b) const override {
    auto n = static_cast<std::int64_t>(word_length_.size());
    std::int64_t g = ((element_[b] - element_[a]) % n + n) % n;
    return Dist(word_length_[g]);
  }

 private:
  std::vector<std::int64_t> element_;  // group element of each point
  std::vector<std::int64_t> word_length_;
};

constexpr std::size_t kValidateLimit = 200;

struct Labeled {
  std::string id;
  Coord coord;
};

Space coordinate_space(std::vector<Labeled> pts, GeneratorSpec spec) {
  std::sort(pts.begin(), pts.end(),
            [](const Labeled& a, const Labeled& b) { return a.id < b.id; });
  std::vector<PointId> ids;
  std::vector<Coord> coords;
  for (auto& p : pts) {
    ids.push_back(std::move(p.id));
    coords.push_back(p.coord);
  }
  bool validate = ids.size() <= kValidateLimit;
  return Space::from_oracle(std::move(ids),
                            std::make_shared<CoordinateMetric>(std::move(coords)),
                            std::move(spec), validate);
}

std::string join(std::span<const std::int64_t> values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out;
}

std::int64_t parse_int(std::string_view text, std::string_view key) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw MalformedInput("generator parameter '" + std::string(key) +
                         "' is not an integer: '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::int64_t> parse_list(std::string_view text,
                                     std::string_view key) {
  std::vector<std::int64_t> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    out.push_back(parse_int(text.substr(0, comma), key));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

const std::string& param(const GeneratorSpec& spec, const std::string& key) {
  auto it = spec.params.find(key);
  if (it == spec.params.end()) {
    throw MalformedInput("generator '" + spec.kind + "' is missing parameter '" +
                         key + "'");
  }
  return it->second;
}

// Uniform draw from [lo, hi] by rejection, so results depend only on the
// mt19937_64 output stream.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % span;
  for (;;) {
    std::uint64_t x = rng();
    if (x < limit) return lo + static_cast<std::int64_t>(x % span);
  }
}

void check_radii(std::span<const Dist> radii) {
  if (radii.empty()) throw MalformedInput("weighted_ball needs at least one radius");
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (radii[i].is_negative()) throw MalformedInput("negative ball radius");
    if (i > 0 && radii[i] > radii[i - 1]) {
      throw MalformedInput("ball radii must be nonincreasing");
    }
  }
}

std::vector<UnboundedHint> path_rays(const Space& space,
                                     std::span<const std::int64_t> lengths,
                                     bool single_line) {
  std::vector<UnboundedHint> hints;
  for (std::size_t k = 0; k < lengths.size(); ++k) {
    UnboundedHint h;
    for (std::int64_t i = 0; i < lengths[k]; ++i) {
      h.ray.push_back(single_line ? "p" + std::to_string(i)
                                  : "c" + std::to_string(k) + "p" +
                                        std::to_string(i));
    }
    h.component_of = h.ray.front();
    hints.push_back(std::move(h));
  }
  for (const auto& h : hints) {
    for (const auto& id : h.ray) space.index_of(id);
  }
  return hints;
}

}  // namespace

Space line_space(std::int64_t n, std::string_view prefix) {
  if (n < 1) throw MalformedInput("line needs n >= 1");
  std::vector<Labeled> pts;
  for (std::int64_t i = 0; i < n; ++i) {
    pts.push_back({std::string(prefix) + std::to_string(i), {i, 0}});
  }
  GeneratorSpec spec{"line", {{"n", std::to_string(n)}}};
  if (prefix != "p") spec.params["prefix"] = std::string(prefix);
  return coordinate_space(std::move(pts), std::move(spec));
}

Space grid_space(std::int64_t width, std::int64_t height) {
  if (width < 1 || height < 1) throw MalformedInput("grid needs positive sides");
  std::vector<Labeled> pts;
  for (std::int64_t x = 0; x < width; ++x) {
    for (std::int64_t y = 0; y < height; ++y) {
      pts.push_back({"g" + std::to_string(x) + "_" + std::to_string(y), {x, y}});
    }
  }
  return coordinate_space(
      std::move(pts),
      {"grid", {{"width", std::to_string(width)},
                {"height", std::to_string(height)}}});
}

Space path_union_space(std::span<const std::int64_t> lengths, const Dist& gap) {
  if (lengths.empty()) throw MalformedInput("need at least one path");
  if (!gap.is_positive() || !gap.is_integer()) {
    throw MalformedInput("path gap must be a positive integer");
  }
  std::vector<Labeled> pts;
  std::int64_t offset = 0;
  for (std::size_t k = 0; k < lengths.size(); ++k) {
    if (lengths[k] < 1) throw MalformedInput("path length must be >= 1");
    for (std::int64_t i = 0; i < lengths[k]; ++i) {
      pts.push_back({"c" + std::to_string(k) + "p" + std::to_string(i),
                     {offset + i, 0}});
    }
    offset += lengths[k] - 1 + gap.num();
  }
  return coordinate_space(
      std::move(pts),
      {"disjoint_union_paths",
       {{"lengths", join(lengths)}, {"gap", gap.to_string()}}});
}

Space cyclic_space(std::int64_t n, std::span<const std::int64_t> generators) {
  if (n < 2) throw MalformedInput("cayley_cyclic needs n >= 2");
  if (generators.empty()) throw MalformedInput("empty generating set");
  std::vector<std::int64_t> steps;
  for (std::int64_t g : generators) {
    std::int64_t r = ((g % n) + n) % n;
    if (r == 0) throw MalformedInput("generator " + std::to_string(g) +
                                     " is trivial in Z/" + std::to_string(n));
    steps.push_back(r);
    steps.push_back(n - r);
  }
  std::vector<std::int64_t> word(n, -1);
  std::deque<std::int64_t> queue{0};
  word[0] = 0;
  while (!queue.empty()) {
    std::int64_t g = queue.front();
    queue.pop_front();
    for (std::int64_t s : steps) {
      std::int64_t h = (g + s) % n;
      if (word[h] < 0) {
        word[h] = word[g] + 1;
        queue.push_back(h);
      }
    }
  }
  if (std::any_of(word.begin(), word.end(), [](std::int64_t w) { return w < 0; })) {
    throw MalformedInput("generators do not generate Z/" + std::to_string(n) +
                         " (the Cayley graph must be connected)");
  }

  std::vector<std::pair<std::string, std::int64_t>> pts;
  for (std::int64_t i = 0; i < n; ++i) pts.emplace_back("z" + std::to_string(i), i);
  std::sort(pts.begin(), pts.end());
  std::vector<PointId> ids;
  std::vector<std::int64_t> element;
  for (auto& [id, g] : pts) {
    ids.push_back(std::move(id));
    element.push_back(g);
  }
  bool validate = ids.size() <= kValidateLimit;
  GeneratorSpec spec{"cayley_cyclic",
                     {{"n", std::to_string(n)}, {"generators", join(generators)}}};
  return Space::from_oracle(
      std::move(ids),
      std::make_shared<CyclicWordMetric>(std::move(element), std::move(word)),
      std::move(spec), validate);
}

Space generated_space(const GeneratorSpec& spec) {
  if (spec.kind == "line") {
    auto it = spec.params.find("prefix");
    return line_space(parse_int(param(spec, "n"), "n"),
                      it == spec.params.end() ? "p" : it->second);
  }
  if (spec.kind == "grid") {
    return grid_space(parse_int(param(spec, "width"), "width"),
                      parse_int(param(spec, "height"), "height"));
  }
  if (spec.kind == "disjoint_union_paths") {
    auto lengths = parse_list(param(spec, "lengths"), "lengths");
    return path_union_space(lengths, Dist::parse(param(spec, "gap")));
  }
  if (spec.kind == "cayley_cyclic") {
    auto gens = parse_list(param(spec, "generators"), "generators");
    return cyclic_space(parse_int(param(spec, "n"), "n"), gens);
  }
  throw MalformedInput("unknown generated metric kind '" + spec.kind + "'");
}

ChainFamily weighted_ball_chains(const Space& space,
                                 std::span<const Dist> radii) {
  check_radii(radii);
  ChainFamily chains(space.size());
  for (PointIndex x = 0; x < space.size(); ++x) {
    for (PointIndex y = 0; y < space.size(); ++y) {
      Dist d = space.distance(x, y);
      Count weight = 0;
      for (const Dist& r : radii) {
        if (d <= r) ++weight;
      }
      chains[x].add(AugPoint::base(y), weight);
    }
  }
  return chains;
}

ChainFamily translate_chains(const Space& cyclic, std::int64_t k) {
  if (!cyclic.generator() || cyclic.generator()->kind != "cayley_cyclic") {
    throw MalformedInput("translate chains need a cayley_cyclic space");
  }
  if (k < 0) throw MalformedInput("folner radius must be >= 0");
  const std::int64_t n = parse_int(param(*cyclic.generator(), "n"), "n");
  auto index = [&](std::int64_t g) {
    return cyclic.index_of("z" + std::to_string(((g % n) + n) % n));
  };
  // A = ball of radius k about the identity.
  const PointIndex identity = index(0);
  std::vector<std::int64_t> folner;
  for (std::int64_t g = 0; g < n; ++g) {
    if (cyclic.distance(identity, index(g)) <= Dist(k)) folner.push_back(g);
  }
  ChainFamily chains(cyclic.size());
  for (std::int64_t x = 0; x < n; ++x) {
    for (std::int64_t g : folner) chains[index(x)].add(AugPoint::base(index(x + g)), 1);
  }
  return chains;
}

Instance gen_instance(std::string_view kind, const GeneratorParams& p,
                      std::uint64_t seed) {
  if (!p.S.is_positive()) throw MalformedInput("S must be positive");
  std::string space_kind(kind);
  std::vector<Dist> radii = p.radii;
  if (kind == "weighted_ball") {
    space_kind = p.base;
    if (space_kind == "weighted_ball") {
      throw MalformedInput("weighted_ball cannot be its own base");
    }
    if (radii.empty()) radii = {p.S, p.S / Rational(2)};
  } else if (radii.empty()) {
    radii = {p.S};
  }
  bool unbounded = p.unbounded.value_or(space_kind == "cayley_cyclic");

  std::optional<Space> space;
  std::vector<UnboundedHint> hints;
  if (space_kind == "line") {
    space = line_space(p.n);
    if (unbounded) {
      const std::int64_t len[] = {p.n};
      hints = path_rays(*space, len, /*single_line=*/true);
    }
  } else if (space_kind == "grid") {
    if (unbounded) throw MalformedInput("grid instances have no built-in ray");
    space = grid_space(p.width, p.height);
  } else if (space_kind == "disjoint_union_paths") {
    if (p.count < 1) throw MalformedInput("need count >= 1 paths");
    if (p.min_length < 1 || p.min_length > p.max_length) {
      throw MalformedInput("invalid path length range");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::int64_t> lengths;
    for (std::int64_t k = 0; k < p.count; ++k) {
      lengths.push_back(draw(rng, p.min_length, p.max_length));
    }
    Dist gap = p.gap.value_or(Rational(2) * p.S);
    if (gap <= p.S) throw MalformedInput("path gap must exceed S");
    space = path_union_space(lengths, gap);
    if (unbounded) hints = path_rays(*space, lengths, /*single_line=*/false);
  } else if (space_kind == "cayley_cyclic") {
    space = cyclic_space(p.n, p.generators);
    if (unbounded) {
      std::int64_t g = ((p.generators.front() % p.n) + p.n) % p.n;
      UnboundedHint h;
      std::int64_t at = 0;
      do {
        h.ray.push_back("z" + std::to_string(at));
        at = (at + g) % p.n;
      } while (at != 0);
      h.component_of = h.ray.front();
      hints.push_back(std::move(h));
    }
  } else {
    throw MalformedInput("unknown generator kind '" + std::string(kind) + "'");
  }
  space->set_hints(std::move(hints));

  ChainFamily chains = (kind == "cayley_cyclic")
                           ? translate_chains(*space, p.folner_radius)
                           : weighted_ball_chains(*space, radii);
  return Instance{std::move(*space), std::move(chains), std::nullopt, p.R,
                  p.epsilon, p.S};
}

}  // namespace naive_a
