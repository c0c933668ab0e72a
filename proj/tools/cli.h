// Copyright 2026 The Qupit Authors
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

#ifndef QUPIT_TOOLS_CLI_H
#define QUPIT_TOOLS_CLI_H

#include <iosfwd>

namespace qupit::cli {

enum ExitCode : int {
    kOk = 0,
    kFailed = 1,
    kInputError = 2,
    kFragmentError = 3,
    kShapeMismatch = 4,
    kOverCap = 5,
};

/// Entry point behind the `qupit` binary. Circuit files named "-" are read
/// from `in`.
int run(int argc, const char *const *argv, std::istream &in, std::ostream &out, std::ostream &err);

}  // namespace qupit::cli

#endif  // QUPIT_TOOLS_CLI_H
