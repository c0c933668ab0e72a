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


#ifndef QUPIT_RANDOM_CIRCUIT_H
#define QUPIT_RANDOM_CIRCUIT_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "qupit/circuit.h"

namespace qupit {

/// splitmix64 step; derives independent per-case seeds from one run seed.
std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index);

/// Gate kinds legal at this modulus that fit on n wires and whose phase
/// degree is at most max_degree.
std::vector<GateKind> legal_gate_kinds(const FieldCtx &ctx, std::size_t n, int max_degree = 3);

Gate random_gate(const FieldCtx &ctx, std::size_t n, const std::vector<GateKind> &kinds,
                 std::mt19937_64 &rng);

/// Exactly `gates` gates, kinds uniform over legal_gate_kinds, wires uniform
/// without replacement, powers and scales uniform in 1..d-1.
Circuit random_circuit(const FieldCtx &ctx, std::size_t n, std::size_t gates, std::mt19937_64 &rng,
                       int max_degree = 3);

}  // namespace qupit

#endif  // QUPIT_RANDOM_CIRCUIT_H
