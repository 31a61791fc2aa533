// Copyright 2026 The Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace matrovar {

/// Malformed or inconsistent input: bad JSON, axiom violations, index errors.
/// The CLI maps these to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// A mathematical precondition does not hold (not nilpotent, not solvable,
/// not in the circuit variety, ...). The CLI maps these to exit code 1.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(std::string precondition, const std::string& what)
      : std::runtime_error(what), precondition_(std::move(precondition)) {}

  const std::string& precondition() const { return precondition_; }

 private:
  std::string precondition_;
};

/// Randomized search exhausted its retry budget. Usually means the sampling
/// bound is too small for the requested genericity. CLI exit code 1.
class GenericityError : public std::runtime_error {
 public:
  explicit GenericityError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace matrovar
