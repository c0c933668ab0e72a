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

#ifndef QUPIT_FIELD_H
#define QUPIT_FIELD_H

#include <cstdint>
#include <iosfwd>

namespace qupit {

/// The prime field F_d. Cheap to copy; d is validated once at construction.
///
/// The raw `add`/`mul`/... helpers operate on residues already reduced into
/// [0, d) and are what the hot paths (substitution, interpretation, oracle)
/// use. `FieldElem` is the checked public face of the same arithmetic.
class FieldCtx {
   public:
    /// Throws Error(NonPrimeModulus) unless d is prime.
    explicit FieldCtx(std::uint64_t d);

    std::uint64_t modulus() const noexcept {
        return d_;
    }

    /// Quadratic phases need 2 invertible.
    bool has_quadratic() const noexcept {
        return d_ != 2;
    }
    /// Cubic phases need 6 invertible.
    bool has_cubic() const noexcept {
        return d_ > 3;
    }

    std::uint64_t reduce(std::int64_t v) const noexcept;
    std::uint64_t reduce_unsigned(std::uint64_t v) const noexcept {
        return v % d_;
    }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const noexcept {
        std::uint64_t s = a + b;
        return (s >= d_ || s < a) ? s - d_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const noexcept {
        return a >= b ? a - b : a + (d_ - b);
    }
    std::uint64_t neg(std::uint64_t a) const noexcept {
        return a == 0 ? 0 : d_ - a;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const noexcept {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % d_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const noexcept;
    /// Throws Error(DivisionByZero) for a = 0.
    std::uint64_t inv(std::uint64_t a) const;

    /// x(x-1)/2; throws Error(FragmentUnavailable) when d = 2.
    std::uint64_t binom2(std::uint64_t x) const;
    /// x(x-1)(x-2)/6; throws Error(FragmentUnavailable) when d <= 3.
    std::uint64_t binom3(std::uint64_t x) const;

    friend bool operator==(const FieldCtx &a, const FieldCtx &b) noexcept {
        return a.d_ == b.d_;
    }

   private:
    std::uint64_t d_;
    std::uint64_t inv2_ = 0;
    std::uint64_t inv6_ = 0;
};

/// A residue in [0, d) tagged with its field. Mixing moduli throws
/// Error(ModulusMismatch).
class FieldElem {
   public:
    FieldElem(const FieldCtx &ctx, std::int64_t value) : ctx_(ctx), value_(ctx.reduce(value)) {
    }

    static FieldElem from_residue(const FieldCtx &ctx, std::uint64_t residue) {
        FieldElem e(ctx, 0);
        e.value_ = ctx.reduce_unsigned(residue);
        return e;
    }

    const FieldCtx &ctx() const noexcept {
        return ctx_;
    }
    std::uint64_t value() const noexcept {
        return value_;
    }
    bool is_zero() const noexcept {
        return value_ == 0;
    }

    FieldElem operator+(const FieldElem &o) const;
    FieldElem operator-(const FieldElem &o) const;
    FieldElem operator*(const FieldElem &o) const;
    FieldElem operator-() const;
    FieldElem inv() const;
    FieldElem pow(std::uint64_t e) const;
    FieldElem binom2() const;
    FieldElem binom3() const;

    /// Throws on modulus mismatch rather than answering false.
    bool operator==(const FieldElem &o) const;
    bool operator!=(const FieldElem &o) const {
        return !(*this == o);
    }

   private:
    void check_same(const FieldElem &o) const;

    FieldCtx ctx_;
    std::uint64_t value_;
};

std::ostream &operator<<(std::ostream &os, const FieldElem &e);

bool is_prime(std::uint64_t d) noexcept;

}  // namespace qupit

#endif  // QUPIT_FIELD_H
