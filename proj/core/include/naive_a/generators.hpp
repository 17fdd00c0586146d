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

#ifndef NAIVE_A_GENERATORS_HPP_
#define NAIVE_A_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "naive_a/chain.hpp"
#include "naive_a/instance.hpp"
#include "naive_a/space.hpp"

namespace naive_a {

// Knobs for gen_instance. Each kind reads the fields it needs.
struct GeneratorParams {
  Rational R{2};
  Rational epsilon{1, 2};
  Dist S{12};

  std::int64_t n = 10;  // line, cayley_cyclic
  std::int64_t width = 10;
  std::int64_t height = 10;

  // disjoint_union_paths: `count` paths with point counts drawn uniformly
  // from [min_length, max_length], consecutive paths `gap` apart (default 2S).
  std::int64_t count = 20;
  std::int64_t min_length = 5;
  std::int64_t max_length = 300;
  std::optional<Dist> gap;

  // cayley_cyclic: generating set (closed under inverses automatically) and
  // the radius of the Folner ball A translated to every group element.
  std::vector<std::int64_t> generators{1, -1};
  std::int64_t folner_radius = 3;

  // Chains are sums of ball indicators over these radii (nonincreasing).
  // Default: [S, S/2] for weighted_ball, [S] for the plain metric kinds.
  std::vector<Dist> radii;

  // Space used under weighted_ball.
  std::string base = "disjoint_union_paths";

  // Attach an unbounded hint with a ray from the first point of each
  // component. Default: on for cayley_cyclic, off otherwise.
  std::optional<bool> unbounded;
};

// kind is one of line, grid, disjoint_union_paths, cayley_cyclic,
// weighted_ball. Identical (kind, params, seed) give identical instances.
// Throws MalformedInput for invalid parameters.
Instance gen_instance(std::string_view kind, const GeneratorParams& params,
                      std::uint64_t seed);

// Rebuilds a generated space from its stored description.
Space generated_space(const GeneratorSpec& spec);

// Individual metric generators.
Space line_space(std::int64_t n, std::string_view prefix = "p");
Space grid_space(std::int64_t width, std::int64_t height);
Space path_union_space(std::span<const std::int64_t> lengths, const Dist& gap);
Space cyclic_space(std::int64_t n, std::span<const std::int64_t> generators);

// a_x = sum_j indicator(ball(x, r_j)).
ChainFamily weighted_ball_chains(const Space& space,
                                 std::span<const Dist> radii);

// a_x = indicator of x + A with A the word-metric ball of radius k about 0.
ChainFamily translate_chains(const Space& cyclic, std::int64_t k);

}  // namespace naive_a

#endif  // NAIVE_A_GENERATORS_HPP_
