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


#ifndef QUPIT_SEMANTICS_H
#define QUPIT_SEMANTICS_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "qupit/affine.h"
#include "qupit/circuit.h"
#include "qupit/phase_poly.h"

namespace qupit {

enum class Fragment { Lin = 1, Quad = 2, Cube = 3 };

std::string_view fragment_name(Fragment f);
std::optional<Fragment> fragment_from_name(std::string_view name);
/// Throws FragmentUnavailable if d does not support f.
void require_fragment(Fragment f, const FieldCtx &ctx);

/// Smallest fragment holding every gate of c; affine-only circuits are Lin.
Fragment infer_fragment(const Circuit &c);

inline constexpr std::uint64_t kDefaultStateCap = 1000000;

/// The pair (g, q): basis state x goes to g(x) with phase exponent q(x).
struct PhaseAffineSem {
    AffineMap g;
    PhasePoly q;
    Fragment fragment;

    std::size_t n() const noexcept {
        return g.n();
    }
    const FieldCtx &ctx() const noexcept {
        return g.ctx();
    }

    static PhaseAffineSem identity(const FieldCtx &ctx, std::size_t n, Fragment f = Fragment::Lin);

    /// Componentwise; the fragment tag is not compared.
    friend bool operator==(const PhaseAffineSem &a, const PhaseAffineSem &b) noexcept {
        return a.g == b.g && a.q == b.q;
    }
};

/// Folds the composition law over the gates. `at_least` widens the inferred
/// fragment.
PhaseAffineSem interpret(const Circuit &c, std::optional<Fragment> at_least = std::nullopt);

/// s1 first, then s2: (g2 g1, q1 + q2 o g1).
PhaseAffineSem compose(const PhaseAffineSem &s2, const PhaseAffineSem &s1);
/// Block sum of the affine parts and a disjoint-variable sum of the phases.
PhaseAffineSem tensor(const PhaseAffineSem &s1, const PhaseAffineSem &s2);

/// Point <-> lexicographic index, x_0 most significant.
std::vector<std::uint64_t> point_of_index(std::uint64_t index, std::size_t n, std::uint64_t d);
std::uint64_t index_of_point(const std::vector<std::uint64_t> &x, std::uint64_t d);
/// d^n, or StateSpaceTooLarge when above cap.
std::uint64_t state_space_size(const FieldCtx &ctx, std::size_t n, std::uint64_t cap);

/// For every basis point in lexicographic order: image index and phase.
struct BasisTable {
    std::size_t n = 0;
    std::uint64_t d = 0;
    std::vector<std::uint64_t> image;
    std::vector<std::uint64_t> phase;

    friend bool operator==(const BasisTable &, const BasisTable &) = default;
};

/// Direct gate-by-gate simulation on every basis point; shares no code with
/// interpret beyond field arithmetic.
BasisTable oracle_table(const Circuit &c, std::uint64_t cap = kDefaultStateCap);
BasisTable table_of(const PhaseAffineSem &sem, std::uint64_t cap = kDefaultStateCap);
bool tables_equal(const BasisTable &a, const BasisTable &b);
std::optional<std::vector<std::uint64_t>> first_difference(const BasisTable &a, const BasisTable &b);

/// Lexicographically smallest x where the images or phases differ. Uses
/// tables when d^n <= cap and a coordinate-fixing search otherwise.
std::optional<std::vector<std::uint64_t>> find_witness(const PhaseAffineSem &a,
                                                       const PhaseAffineSem &b,
                                                       std::uint64_t cap = kDefaultStateCap);

}  // namespace qupit

#endif  // QUPIT_SEMANTICS_H
