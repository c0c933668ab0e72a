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

#ifndef QUPIT_ERROR_H
#define QUPIT_ERROR_H

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qupit {

enum class ErrorKind {
    ModulusMismatch,
    DivisionByZero,
    NonPrimeModulus,
    FragmentUnavailable,
    DimensionMismatch,
    BadWires,
    BadParameter,
    SyntaxError,
    StateSpaceTooLarge,
};

std::string_view error_kind_name(ErrorKind kind);

/// All library failures are reported through this exception; `kind()` is the
/// machine-readable part, `what()` the human-readable one.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message);

    ErrorKind kind() const noexcept {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

/// Parse failure with a 1-based source position.
class SyntaxError : public Error {
   public:
    SyntaxError(std::size_t line, std::size_t column, const std::string &message);

    std::size_t line() const noexcept {
        return line_;
    }
    std::size_t column() const noexcept {
        return column_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace qupit

#endif  // QUPIT_ERROR_H
