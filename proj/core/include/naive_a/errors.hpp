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

#ifndef NAIVE_A_ERRORS_HPP_
#define NAIVE_A_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace naive_a {

// Base class for every error raised by the library. The CLI maps each
// subclass onto a distinct exit status.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that cannot be parsed or is not a valid metric space / chain family.
class MalformedInput : public Error {
 public:
  using Error::Error;
};

class MetricAxiomError : public MalformedInput {
 public:
  using MalformedInput::MalformedInput;
};

class UnknownPoint : public MalformedInput {
 public:
  explicit UnknownPoint(const std::string& id)
      : MalformedInput("unknown point id '" + id + "'"), id_(id) {}
  const std::string& id() const { return id_; }

 private:
  std::string id_;
};

// The input is well-formed but does not satisfy the assumptions the
// construction needs (S > R, conditions (i)-(iii) on the chains, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A guarantee of the construction failed at runtime. Always a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// Exact arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

}  // namespace naive_a

#endif  // NAIVE_A_ERRORS_HPP_
