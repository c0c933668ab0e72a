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


#ifndef QUPIT_AXIOMS_H
#define QUPIT_AXIOMS_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qupit/circuit.h"
#include "qupit/semantics.h"

namespace qupit {

enum class AxiomFamily { Aff, Lin, Quad, Cubic, TransportTable, CommTable };

std::string_view axiom_family_name(AxiomFamily f);

struct AxiomInstance {
    std::string id;
    AxiomFamily family;
    std::vector<std::pair<std::string, std::uint64_t>> params;
    Circuit lhs;
    Circuit rhs;
    /// Smallest fragment containing every gate on both sides.
    Fragment fragment;

    /// "<id> d=<d> [k=v ...]"
    std::string label() const;
};

/// Every equation applicable at d, with F_d parameters expanded. Instances
/// whose gates do not exist at d are left out. Wire 0 is the top wire, and
/// "top" variants put the diagonal on the control of the CX.
std::vector<AxiomInstance> catalogue(const FieldCtx &ctx);

struct AxiomVerdict {
    bool ok = false;
    bool oracle_checked = false;
    std::optional<std::vector<std::uint64_t>> witness;
    std::string detail;
};

/// Compares interpret(lhs) with interpret(rhs), and the oracle tables when
/// d^n <= cap.
AxiomVerdict verify_axiom(const AxiomInstance &a, std::uint64_t cap = kDefaultStateCap);

/// Replaces one uniformly chosen occurrence of an axiom side (under an
/// injective wire relabelling) by the other side. With no occurrence, inserts
/// a random gate followed by its inverse. Deterministic in the seed.
Circuit random_sound_rewrite(const Circuit &c, std::uint64_t seed);

}  // namespace qupit

#endif  // QUPIT_AXIOMS_H
