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

#ifndef QUPIT_FUZZ_H
#define QUPIT_FUZZ_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qupit/semantics.h"

namespace qupit {

struct FuzzOptions {
    std::uint64_t d = 5;
    std::size_t n = 3;
    std::uint64_t count = 100;
    std::size_t max_gates = 60;
    std::uint64_t seed = 0;
    /// Chained random_sound_rewrite steps per ancestor.
    std::size_t rewrite_chain = 5;
    /// Harness self-test: perturb the normal form's global phase before
    /// rendering, so every case must be reported.
    bool mutate = false;
    std::uint64_t cap = kDefaultStateCap;
    unsigned jobs = 1;
};

struct FuzzFailure {
    std::uint64_t case_index = 0;
    /// Per-case seed; feeding it to random_circuit reproduces the circuit.
    std::uint64_t seed = 0;
    std::string property;
    std::string circuit;
};

struct FuzzReport {
    std::uint64_t checked = 0;
    std::uint64_t oracle_checked = 0;
    std::uint64_t oracle_skipped = 0;
    std::vector<FuzzFailure> failures;

    bool ok() const noexcept {
        return failures.empty();
    }
};

/// Case i uses split_seed(seed, i); results do not depend on `jobs`.
FuzzReport run_fuzz(const FuzzOptions &opts);

}  // namespace qupit

#endif  // QUPIT_FUZZ_H
