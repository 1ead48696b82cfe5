// Copyright 2026 The Blotto Costs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BLOTTO_ERRORS_H_
#define BLOTTO_ERRORS_H_

#include <stdexcept>
#include <string>

namespace blotto {

// Invalid input: malformed game parameters, strategies outside the owner's
// strategy set, non-monotone cost functions, bad configuration fields.
class PreconditionError : public std::invalid_argument {
 public:
  explicit PreconditionError(const std::string& what)
      : std::invalid_argument(what) {}
};

// Raised when exhaustive enumeration would exceed the configured cap.
class ScaleExceededError : public std::runtime_error {
 public:
  explicit ScaleExceededError(const std::string& what)
      : std::runtime_error("oracle scale exceeded: " + what) {}
};

class InvalidFlowError : public std::runtime_error {
 public:
  explicit InvalidFlowError(const std::string& what)
      : std::runtime_error("invalid flow: " + what) {}
};

// The LP backend failed or returned a status that cannot occur for a
// correctly constructed model.
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace blotto

#endif  // BLOTTO_ERRORS_H_
