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

#ifndef NAIVE_A_IO_HPP_
#define NAIVE_A_IO_HPP_

#include <string>
#include <string_view>

#include "naive_a/chain.hpp"
#include "naive_a/instance.hpp"
#include "naive_a/space.hpp"
#include "naive_a/tailor.hpp"

namespace naive_a {

// Instance JSON:
//   {"space": {"points": [...], "metric": {"type": "matrix" | "graph" |
//    "generator", ...}},
//    "params": {"R": "2", "epsilon": "1/3", "S": "4"},
//    "chains": {x: {z: count}}, "sets": {x: [[z, level], ...]},
//    "multiplicity_bound": M, "unbounded_hints": [{"component_of": x,
//    "ray": [...]}]}
// Rationals are strings "a" or "a/b"; JSON integers are also accepted.
// Throws MalformedInput on any structural problem.
Instance parse_instance(std::string_view text);

// Canonical form: sorted keys, normalized rationals, points in id order.
std::string serialize_instance(const Instance& instance);

struct RunOutput {
  SubsetFamily subsets;
  Certificate certificate;
};

std::string serialize_output(const Space& space, const SubsetFamily& subsets,
                             const Certificate& certificate);

// Throws MalformedInput if a field is missing or ill-typed.
RunOutput parse_output(std::string_view text, const Space& space);

// Summary of a decomposition and tailoring plan, one component per line.
std::string describe_plan(const Space& space, const InstanceParams& params,
                          const TailorPlan& plan);

// "{id:v, lambda#j:v}" with entries in canonical order.
std::string format_chain(const Space& space, const Chain& chain);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace naive_a

#endif  // NAIVE_A_IO_HPP_
