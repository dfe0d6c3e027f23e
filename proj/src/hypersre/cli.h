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

#ifndef HYPERSRE_CLI_H
#define HYPERSRE_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

#include "hypersre/verify.h"

namespace hypersre::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 1,
    kCapacityError = 2,
    kVerificationFailure = 3,
};

/// Test seams. Production callers leave everything default.
struct Environment {
    /// Replaces the rank-formula moment inside `verify`.
    MomentFn verify_moment;
};

/// Runs one command line (program name excluded), writing the report to
/// `out` and diagnostics to `err`. Returns an ExitCode.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err, const Environment &env = {});

}  // namespace hypersre::cli

#endif
