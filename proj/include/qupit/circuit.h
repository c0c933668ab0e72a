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


#ifndef QUPIT_CIRCUIT_H
#define QUPIT_CIRCUIT_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qupit/affine.h"
#include "qupit/field.h"
#include "qupit/phase_poly.h"

namespace qupit {

enum class GateKind { X, M, CX, SWAP, Z, S, T, W, CZ, CS, SC, CCZ };

inline constexpr std::array<GateKind, 12> kAllGateKinds = {
    GateKind::X, GateKind::M,  GateKind::CX, GateKind::SWAP, GateKind::Z,  GateKind::S,
    GateKind::T, GateKind::W,  GateKind::CZ, GateKind::CS,   GateKind::SC, GateKind::CCZ};

std::string_view gate_name(GateKind kind);
std::optional<GateKind> gate_kind_from_name(std::string_view name);
std::size_t gate_arity(GateKind kind);
bool is_affine(GateKind kind);
/// 0 for affine gates, otherwise the phase degree (W and Z are 1).
int gate_degree(GateKind kind);
/// Whether the gate exists at this modulus.
bool gate_allowed(GateKind kind, const FieldCtx &ctx);

/// `arg` is the power in {1..d-1} for every kind except M, where it is the
/// nonzero scale, and SWAP, where it is always 1.
struct Gate {
    GateKind kind = GateKind::X;
    std::array<std::uint32_t, 3> wires{0, 0, 0};
    std::uint64_t arg = 1;

    friend bool operator==(const Gate &a, const Gate &b) noexcept;
};

AffineGate to_affine_gate(const Gate &g);
DiagonalKind to_diagonal_kind(GateKind kind);

/// Gates are applied left to right.
class Circuit {
   public:
    Circuit(const FieldCtx &ctx, std::size_t n);

    std::size_t n() const noexcept {
        return n_;
    }
    const FieldCtx &ctx() const noexcept {
        return ctx_;
    }
    const std::vector<Gate> &gates() const noexcept {
        return gates_;
    }
    std::size_t size() const noexcept {
        return gates_.size();
    }
    bool empty() const noexcept {
        return gates_.empty();
    }

    /// Validates arity, wires and fragment, reduces the power and drops the
    /// gate when it reduces to 0. For M, `arg` is the scale and 0 is
    /// BadParameter.
    Circuit &append(GateKind kind, std::initializer_list<std::uint32_t> wires, std::int64_t arg = 1);
    Circuit &append(GateKind kind, const std::vector<std::uint32_t> &wires, std::int64_t arg = 1);
    Circuit &append(const Gate &g);
    Circuit &append(const Circuit &c);

    friend bool operator==(const Circuit &a, const Circuit &b) noexcept {
        return a.ctx_ == b.ctx_ && a.n_ == b.n_ && a.gates_ == b.gates_;
    }

   private:
    FieldCtx ctx_;
    std::size_t n_;
    std::vector<Gate> gates_;
};

/// c1 first, then c2. Throws DimensionMismatch.
Circuit compose(const Circuit &c2, const Circuit &c1);
/// c1 on the low wires, c2 shifted above it. Throws ModulusMismatch.
Circuit tensor(const Circuit &c1, const Circuit &c2);
Circuit adjoint(const Circuit &c);
Gate inverse_gate(const Gate &g, const FieldCtx &ctx);
/// Rewrites CZ/CS/SC/CCZ into X, M, CX, SWAP, Z, S, T, W words with equal
/// semantics.
Circuit expand_derived(const Circuit &c);
/// Appends the affine gates of a synthesis.
void append_affine(Circuit &c, const std::vector<AffineGate> &gates);

/// Throws SyntaxError, FragmentUnavailable, BadWires, BadParameter or
/// NonPrimeModulus.
Circuit parse_circuit(std::string_view text);
std::string format_gate(const Gate &g);
std::string print_circuit(const Circuit &c);

}  // namespace qupit

#endif  // QUPIT_CIRCUIT_H
