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


#ifndef QUPIT_PHASE_POLY_H
#define QUPIT_PHASE_POLY_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qupit/affine.h"
#include "qupit/field.h"

namespace qupit {

/// Binomial basis element. Const = 1, Lin = x_a, Quad = C(x_a,2),
/// Cub = C(x_a,3), Prod2 = x_a x_b (a<b), LinQuad = x_a C(x_b,2) (a!=b),
/// Prod3 = x_a x_b x_c (a<b<c).
enum class MonoKind : std::uint8_t { Const, Lin, Quad, Cub, Prod2, LinQuad, Prod3 };

struct Monomial {
    MonoKind kind = MonoKind::Const;
    std::array<std::uint32_t, 3> w{0, 0, 0};

    static Monomial constant() {
        return {};
    }
    static Monomial lin(std::uint32_t i) {
        return {MonoKind::Lin, {i, 0, 0}};
    }
    static Monomial quad(std::uint32_t i) {
        return {MonoKind::Quad, {i, 0, 0}};
    }
    static Monomial cub(std::uint32_t i) {
        return {MonoKind::Cub, {i, 0, 0}};
    }
    /// Wires in any order.
    static Monomial prod2(std::uint32_t i, std::uint32_t j);
    static Monomial lin_quad(std::uint32_t lin, std::uint32_t quad) {
        return {MonoKind::LinQuad, {lin, quad, 0}};
    }
    /// Wires in any order.
    static Monomial prod3(std::uint32_t i, std::uint32_t j, std::uint32_t k);

    int degree() const noexcept;
    std::size_t arity() const noexcept;
    std::uint32_t max_wire() const noexcept;
    std::string kind_name() const;
    std::string to_string() const;

    friend bool operator==(const Monomial &a, const Monomial &b) noexcept;
    /// Fixed print order: Const; per wire Lin, Quad, Cub; Prod2 pairs; the
    /// x_i C(x_j,2) block with i<j; the x_j C(x_i,2) block with i<j keyed
    /// by (i,j); Prod3 triples. Each block is lexicographic.
    friend bool operator<(const Monomial &a, const Monomial &b) noexcept;
};

/// Dense position of each monomial in the fixed order, for n wires and a
/// degree cap. Used as an accumulator layout.
class MonomialIndexer {
   public:
    MonomialIndexer(std::size_t n, int cap);

    std::size_t size() const noexcept {
        return size_;
    }
    std::size_t index(const Monomial &m) const noexcept;
    /// Visits monomials in index order.
    void for_each(const std::function<void(std::size_t, const Monomial &)> &fn) const;

    std::size_t pair_rank(std::size_t i, std::size_t j) const noexcept;
    std::size_t triple_rank(std::size_t i, std::size_t j, std::size_t k) const noexcept;

   private:
    std::size_t n_;
    int cap_;
    std::size_t per_wire_;
    std::size_t off_prod2_, off_cs_, off_sc_, off_prod3_, size_;
};

enum class DiagonalKind { Z, S, T, W, CZ, CS, SC, CCZ };

/// Smallest degree cap holding the generator's phase.
int diagonal_degree(DiagonalKind kind);

/// Largest degree cap usable at this modulus.
int max_degree_cap(const FieldCtx &ctx);

/// A phase function F_d^n -> F_d in the binomial basis. Coefficients are kept
/// sparse and nonzero, so equal maps mean equal functions.
class PhasePoly {
   public:
    using Terms = std::map<Monomial, std::uint64_t>;

    /// Throws FragmentUnavailable when the cap is not supported by d, and
    /// BadParameter for caps outside 1..3.
    PhasePoly(const FieldCtx &ctx, std::size_t n, int degree_cap);

    static PhasePoly from_generator(DiagonalKind kind, const std::vector<std::uint32_t> &wires,
                                    std::uint64_t power, std::size_t n, const FieldCtx &ctx);

    std::size_t n() const noexcept {
        return n_;
    }
    const FieldCtx &ctx() const noexcept {
        return ctx_;
    }
    int degree_cap() const noexcept {
        return cap_;
    }
    const Terms &terms() const noexcept {
        return terms_;
    }
    bool is_zero() const noexcept {
        return terms_.empty();
    }
    int max_degree() const noexcept;

    std::uint64_t coeff(const Monomial &m) const;
    /// Adds c to the coefficient of m. Throws BadWires / FragmentUnavailable if
    /// m does not fit.
    void add_term(const Monomial &m, std::uint64_t c);
    void set(const Monomial &m, std::uint64_t c);

    /// Raises the cap; never lowers it.
    void widen(int cap);

    std::uint64_t eval(const std::vector<std::uint64_t> &x) const;
    FieldElem eval(const std::vector<FieldElem> &x) const;

    /// q with x_var fixed to value; the variable stays in range but no
    /// longer occurs.
    PhasePoly restrict(std::size_t var, std::uint64_t value) const;

    friend bool operator==(const PhasePoly &a, const PhasePoly &b) noexcept {
        return a.ctx_ == b.ctx_ && a.n_ == b.n_ && a.terms_ == b.terms_;
    }

   private:
    void check_fits(const Monomial &m) const;

    FieldCtx ctx_;
    std::size_t n_;
    int cap_;
    Terms terms_;
};

/// Throws DimensionMismatch unless n and d agree.
PhasePoly add(const PhasePoly &a, const PhasePoly &b);
PhasePoly operator+(const PhasePoly &a, const PhasePoly &b);
PhasePoly operator-(const PhasePoly &a);

/// q o g, i.e. x -> q(A x + b).
PhasePoly substitute_affine(const PhasePoly &q, const AffineMap &g);

/// Value of a single basis element at x.
std::uint64_t eval_monomial(const FieldCtx &ctx, const Monomial &m,
                            const std::vector<std::uint64_t> &x);

namespace detail {

/// Rows of a (not necessarily invertible) affine substitution: x_v is
/// replaced by sum_k a[v*n+k] x_k + b[v].
struct LinearForms {
    std::size_t n;
    const std::uint64_t *a;
    const std::uint64_t *b;
};

/// Expands c * m(L(x)) into the binomial basis, calling sink(monomial, coeff)
/// for every produced term. Terms may repeat and may be zero.
void expand_monomial(const FieldCtx &ctx, const Monomial &m, std::uint64_t c,
                     const LinearForms &forms,
                     const std::function<void(const Monomial &, std::uint64_t)> &sink);

/// Dense accumulator over a MonomialIndexer layout.
class DenseAccumulator {
   public:
    DenseAccumulator(const FieldCtx &ctx, std::size_t n, int cap);

    void add(const Monomial &m, std::uint64_t c) {
        std::size_t i = indexer_.index(m);
        coeffs_[i] = ctx_.add(coeffs_[i], c);
    }
    void add_substituted(const Monomial &m, std::uint64_t c, const LinearForms &forms);
    void raise_cap(int cap);
    int cap() const noexcept {
        return cap_;
    }
    PhasePoly to_poly() const;

   private:
    FieldCtx ctx_;
    std::size_t n_;
    int cap_;
    MonomialIndexer indexer_;
    std::vector<std::uint64_t> coeffs_;
};

}  // namespace detail

}  // namespace qupit

#endif  // QUPIT_PHASE_POLY_H
