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

#include "qupit/field.h"

#include <ostream>
#include <string>

#include "qupit/error.h"

namespace qupit {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::ModulusMismatch:
            return "ModulusMismatch";
        case ErrorKind::DivisionByZero:
            return "DivisionByZero";
        case ErrorKind::NonPrimeModulus:
            return "NonPrimeModulus";
        case ErrorKind::FragmentUnavailable:
            return "FragmentUnavailable";
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::BadWires:
            return "BadWires";
        case ErrorKind::BadParameter:
            return "BadParameter";
        case ErrorKind::SyntaxError:
            return "SyntaxError";
        case ErrorKind::StateSpaceTooLarge:
            return "StateSpaceTooLarge";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string &message) : std::runtime_error(message), kind_(kind) {
}

SyntaxError::SyntaxError(std::size_t line, std::size_t column, const std::string &message)
    : Error(ErrorKind::SyntaxError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {
}

bool is_prime(std::uint64_t d) noexcept {
    if (d < 2) {
        return false;
    }
    if (d < 4) {
        return true;
    }
    if (d % 2 == 0 || d % 3 == 0) {
        return false;
    }
    for (std::uint64_t f = 5; f <= d / f; f += 6) {
        if (d % f == 0 || d % (f + 2) == 0) {
            return false;
        }
    }
    return true;
}

FieldCtx::FieldCtx(std::uint64_t d) : d_(d) {
    if (!is_prime(d)) {
        throw Error(ErrorKind::NonPrimeModulus, "modulus " + std::to_string(d) + " is not prime");
    }
    if (has_quadratic()) {
        inv2_ = inv(2);
    }
    if (has_cubic()) {
        inv6_ = inv(6);
    }
}

std::uint64_t FieldCtx::reduce(std::int64_t v) const noexcept {
    if (v >= 0) {
        return static_cast<std::uint64_t>(v) % d_;
    }
    // -(v+1) avoids overflow at INT64_MIN.
    std::uint64_t m = static_cast<std::uint64_t>(-(v + 1)) % d_;
    return d_ - 1 - m;
}

std::uint64_t FieldCtx::pow(std::uint64_t a, std::uint64_t e) const noexcept {
    std::uint64_t result = 1 % d_;
    std::uint64_t base = a % d_;
    while (e > 0) {
        if (e & 1) {
            result = mul(result, base);
        }
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

std::uint64_t FieldCtx::inv(std::uint64_t a) const {
    a %= d_;
    if (a == 0) {
        throw Error(ErrorKind::DivisionByZero, "zero has no inverse in F_" + std::to_string(d_));
    }
    // Fermat: a^(d-2).
    return pow(a, d_ - 2);
}

std::uint64_t FieldCtx::binom2(std::uint64_t x) const {
    if (!has_quadratic()) {
        throw Error(ErrorKind::FragmentUnavailable, "binom2 needs an odd prime modulus");
    }
    return mul(mul(x, sub(x, 1 % d_)), inv2_);
}

std::uint64_t FieldCtx::binom3(std::uint64_t x) const {
    if (!has_cubic()) {
        throw Error(ErrorKind::FragmentUnavailable, "binom3 needs a prime modulus above 3");
    }
    return mul(mul(mul(x, sub(x, 1)), sub(x, 2)), inv6_);
}

void FieldElem::check_same(const FieldElem &o) const {
    if (!(ctx_ == o.ctx_)) {
        throw Error(ErrorKind::ModulusMismatch, "cannot mix F_" + std::to_string(ctx_.modulus()) +
                                                    " and F_" + std::to_string(o.ctx_.modulus()));
    }
}

FieldElem FieldElem::operator+(const FieldElem &o) const {
    check_same(o);
    return from_residue(ctx_, ctx_.add(value_, o.value_));
}

FieldElem FieldElem::operator-(const FieldElem &o) const {
    check_same(o);
    return from_residue(ctx_, ctx_.sub(value_, o.value_));
}

FieldElem FieldElem::operator*(const FieldElem &o) const {
    check_same(o);
    return from_residue(ctx_, ctx_.mul(value_, o.value_));
}

FieldElem FieldElem::operator-() const {
    return from_residue(ctx_, ctx_.neg(value_));
}

FieldElem FieldElem::inv() const {
    return from_residue(ctx_, ctx_.inv(value_));
}

FieldElem FieldElem::pow(std::uint64_t e) const {
    return from_residue(ctx_, ctx_.pow(value_, e));
}

FieldElem FieldElem::binom2() const {
    return from_residue(ctx_, ctx_.binom2(value_));
}

FieldElem FieldElem::binom3() const {
    return from_residue(ctx_, ctx_.binom3(value_));
}

bool FieldElem::operator==(const FieldElem &o) const {
    check_same(o);
    return value_ == o.value_;
}

std::ostream &operator<<(std::ostream &os, const FieldElem &e) {
    return os << e.value();
}

}  // namespace qupit
