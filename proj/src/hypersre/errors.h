// Copyright 2026 The hypersre Authors
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

#ifndef HYPERSRE_ERRORS_H
#define HYPERSRE_ERRORS_H

#include <stdexcept>
#include <string>

namespace hypersre {

/// Raised when an argument breaks an operation's documented precondition
/// (wrong shape, non-triangular input, index out of range, ...).
struct ContractViolation : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Raised when a problem exceeds a configured size limit. `flag` names the
/// command line option that raises the limit, when there is one.
struct CapacityError : std::runtime_error {
    CapacityError(const std::string &message, std::string flag = {})
        : std::runtime_error(flag.empty() ? message : message + " (raise it with " + flag + ")"),
          flag(std::move(flag)) {
    }
    std::string flag;
};

/// Raised when an iterative quantity has not settled within tolerance.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hypersre

#endif
