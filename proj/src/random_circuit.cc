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

#include "qupit/random_circuit.h"

#include <algorithm>

#include "qupit/error.h"

namespace qupit {

std::uint64_t split_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::vector<GateKind> legal_gate_kinds(const FieldCtx &ctx, std::size_t n, int max_degree) {
    std::vector<GateKind> out;
    for (GateKind k : kAllGateKinds) {
        if (gate_allowed(k, ctx) && gate_arity(k) <= n && gate_degree(k) <= max_degree) {
            out.push_back(k);
        }
    }
    return out;
}

Gate random_gate(const FieldCtx &ctx, std::size_t n, const std::vector<GateKind> &kinds,
                 std::mt19937_64 &rng) {
    if (kinds.empty()) {
        throw Error(ErrorKind::BadParameter, "no gate kinds to draw from");
    }
    Gate g;
    g.kind = kinds[std::uniform_int_distribution<std::size_t>(0, kinds.size() - 1)(rng)];
    std::size_t arity = gate_arity(g.kind);
    for (std::size_t i = 0; i < arity; ++i) {
        std::uint32_t w = 0;
        do {
            w = static_cast<std::uint32_t>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng));
        } while (std::find(g.wires.begin(), g.wires.begin() + static_cast<long>(i), w) !=
                 g.wires.begin() + static_cast<long>(i));
        g.wires[i] = w;
    }
    std::uint64_t d = ctx.modulus();
    g.arg = g.kind == GateKind::SWAP ? 1 : std::uniform_int_distribution<std::uint64_t>(1, d - 1)(rng);
    return g;
}

Circuit random_circuit(const FieldCtx &ctx, std::size_t n, std::size_t gates, std::mt19937_64 &rng,
                       int max_degree) {
    std::vector<GateKind> kinds = legal_gate_kinds(ctx, n, max_degree);
    Circuit c(ctx, n);
    for (std::size_t i = 0; i < gates; ++i) {
        c.append(random_gate(ctx, n, kinds, rng));
    }
    return c;
}

}  // namespace qupit
