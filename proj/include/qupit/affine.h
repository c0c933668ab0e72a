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


#ifndef QUPIT_AFFINE_H
#define QUPIT_AFFINE_H

#include <cstddef>
#include <cstdint>
#include <vector>

#include "qupit/field.h"

namespace qupit {

enum class AffineKind { X, M, CX, SWAP };

/// One atomic affine gate. `arg` is the power for X and CX, the scale for M,
/// and ignored for SWAP. CX(a, b) adds arg * x_a into x_b.
struct AffineGate {
    AffineKind kind;
    std::uint32_t a = 0;
    std::uint32_t b = 0;
    std::uint64_t arg = 1;

    friend bool operator==(const AffineGate &, const AffineGate &) = default;
};

/// x -> A x + b over F_d, with A invertible. A is dense row-major.
class AffineMap {
   public:
    /// Throws DimensionMismatch on bad sizes and BadParameter if A is singular.
    AffineMap(const FieldCtx &ctx, std::size_t n, std::vector<std::uint64_t> a,
              std::vector<std::uint64_t> b);

    static AffineMap identity(const FieldCtx &ctx, std::size_t n);
    /// Throws BadWires or BadParameter (zero scale for M).
    static AffineMap from_generator(const FieldCtx &ctx, std::size_t n, const AffineGate &gate);

    std::size_t n() const noexcept {
        return n_;
    }
    const FieldCtx &ctx() const noexcept {
        return ctx_;
    }
    std::uint64_t a(std::size_t row, std::size_t col) const {
        return a_[row * n_ + col];
    }
    std::uint64_t b(std::size_t row) const {
        return b_[row];
    }
    const std::vector<std::uint64_t> &matrix() const noexcept {
        return a_;
    }
    const std::vector<std::uint64_t> &translation() const noexcept {
        return b_;
    }

    bool is_identity() const noexcept;
    bool is_linear() const noexcept;

    std::vector<std::uint64_t> apply(const std::vector<std::uint64_t> &x) const;
    AffineMap inverse() const;

    // In-place post-composition: *this <- h o *this for the named generator.
    // Wires are trusted; these sit on the interpretation hot path.
    void shear(std::size_t src, std::size_t dst, std::uint64_t k);
    void scale(std::size_t i, std::uint64_t k);
    void translate(std::size_t i, std::uint64_t k);
    void swap(std::size_t i, std::size_t j);
    void post_apply(const AffineGate &gate);

    friend bool operator==(const AffineMap &x, const AffineMap &y) noexcept {
        return x.ctx_ == y.ctx_ && x.n_ == y.n_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

   private:
    AffineMap(const FieldCtx &ctx, std::size_t n);

    FieldCtx ctx_;
    std::size_t n_;
    std::vector<std::uint64_t> a_;
    std::vector<std::uint64_t> b_;
};

/// g2 o g1. Throws DimensionMismatch.
AffineMap compose(const AffineMap &g2, const AffineMap &g1);

/// g1 acting on the first wires, g2 on the rest.
AffineMap block_sum(const AffineMap &g1, const AffineMap &g2);

/// Deterministic Gauss-Jordan synthesis. Applying the returned gates left to
/// right reproduces g. The list ends with the translation column.
std::vector<AffineGate> synthesize(const AffineMap &g);

}  // namespace qupit

#endif  // QUPIT_AFFINE_H
