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


#ifndef QUPIT_NORMAL_FORM_H
#define QUPIT_NORMAL_FORM_H

#include <boost/multiprecision/cpp_int.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qupit/affine.h"
#include "qupit/circuit.h"
#include "qupit/phase_poly.h"
#include "qupit/semantics.h"

namespace qupit {

using BigInt = boost::multiprecision::cpp_int;

/// Exponents of the diagonal layer. Pair arrays are indexed by the rank of
/// (i<j) in lexicographic order, triples likewise. Arrays for a fragment the
/// modulus cannot host are empty; everything else is sized for the largest
/// fragment d supports, so the record does not depend on which gates happened
/// to occur.
struct DiagonalNF {
    explicit DiagonalNF(const FieldCtx &c) : ctx(c) {
    }

    FieldCtx ctx;
    std::size_t n = 0;
    Fragment fragment = Fragment::Lin;
    std::uint64_t w = 0;
    std::vector<std::uint64_t> z, s, t;
    std::vector<std::uint64_t> cz, cs, sc;
    std::vector<std::uint64_t> ccz;

    static DiagonalNF zero(const FieldCtx &ctx, std::size_t n, Fragment fragment);
    static DiagonalNF from_poly(const PhasePoly &q, Fragment fragment);
    PhasePoly to_poly() const;

    std::size_t pair_index(std::size_t i, std::size_t j) const;
    std::size_t triple_index(std::size_t i, std::size_t j, std::size_t k) const;

    /// The fragment tag is informational and not compared.
    friend bool operator==(const DiagonalNF &a, const DiagonalNF &b) noexcept;
};

struct PhaseAffineNF {
    DiagonalNF diag;
    std::vector<AffineGate> aff;

    friend bool operator==(const PhaseAffineNF &a, const PhaseAffineNF &b) noexcept {
        return a.diag == b.diag && a.aff == b.aff;
    }
};

PhaseAffineNF normal_form_of(const PhaseAffineSem &sem);
PhaseAffineNF normalize(const Circuit &c, std::optional<Fragment> at_least = std::nullopt);

/// Diagonal layer (W; Z, S, T per wire; CZ, CS, SC, CCZ stairs) followed by
/// the affine gates. Zero exponents are skipped.
Circuit render(const PhaseAffineNF &nf);

/// Throws DimensionMismatch when n or d differ.
bool equivalent(const Circuit &c1, const Circuit &c2);

/// Number of diagonal normal forms on n wires. Throws FragmentUnavailable.
BigInt count_diagonal_forms(std::size_t n, Fragment fragment, const FieldCtx &ctx);
/// Number of basis monomials in the fragment (the exponent of the count).
std::size_t diagonal_dimension(std::size_t n, Fragment fragment);

struct InjectivityReport {
    BigInt total;
    std::uint64_t checked = 0;
    bool complete = false;
    /// Pairs of enumeration indices whose rendered circuits share a table.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> collisions;
};

/// Enumerates coefficient vectors in mixed-radix order (at most sample_cap of
/// them), renders each form and hashes its oracle table.
InjectivityReport enumerate_and_check_injectivity(std::size_t n, Fragment fragment,
                                                  const FieldCtx &ctx, std::uint64_t sample_cap);

}  // namespace qupit

#endif  // QUPIT_NORMAL_FORM_H
