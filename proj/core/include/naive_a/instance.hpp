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

#ifndef NAIVE_A_INSTANCE_HPP_
#define NAIVE_A_INSTANCE_HPP_

#include <optional>

#include "naive_a/chain.hpp"
#include "naive_a/space.hpp"

namespace naive_a {

// A space together with a Property A witness and its scale parameters.
struct Instance {
  Space space;
  ChainFamily chains;  // given directly or derived from `sets`
  std::optional<SetFamily> sets;
  Rational R;
  Rational epsilon;
  Dist S;

  InstanceParams params() const {
    InstanceParams p;
    p.R = R;
    p.epsilon = epsilon;
    p.S = S;
    return p;
  }
};

}  // namespace naive_a

#endif  // NAIVE_A_INSTANCE_HPP_
