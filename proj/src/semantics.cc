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

#include "qupit/semantics.h"

#include <algorithm>
#include <string>

#include "qupit/error.h"

namespace qupit {

std::string_view fragment_name(Fragment f) {
    switch (f) {
        case Fragment::Lin:
            return "lin";
        case Fragment::Quad:
            return "quad";
        case Fragment::Cube:
            return "cube";
    }
    return "?";
}

std::optional<Fragment> fragment_from_name(std::string_view name) {
    if (name == "lin") {
        return Fragment::Lin;
    }
    if (name == "quad") {
        return Fragment::Quad;
    }
    if (name == "cube" || name == "cubic") {
        return Fragment::Cube;
    }
    return std::nullopt;
}

void require_fragment(Fragment f, const FieldCtx &ctx) {
    if (static_cast<int>(f) > max_degree_cap(ctx)) {
        throw Error(ErrorKind::FragmentUnavailable, std::string(fragment_name(f)) +
                                                        " fragment is unavailable at d=" +
                                                        std::to_string(ctx.modulus()));
    }
}

Fragment infer_fragment(const Circuit &c) {
    int deg = 1;
    for (const Gate &g : c.gates()) {
        deg = std::max(deg, gate_degree(g.kind));
    }
    return static_cast<Fragment>(deg);
}

PhaseAffineSem PhaseAffineSem::identity(const FieldCtx &ctx, std::size_t n, Fragment f) {
    return {AffineMap::identity(ctx, n), PhasePoly(ctx, n, static_cast<int>(f)), f};
}

namespace {

Monomial gate_monomial(const Gate &g) {
    const auto &w = g.wires;
    switch (g.kind) {
        case GateKind::Z:
            return Monomial::lin(w[0]);
        case GateKind::S:
            return Monomial::quad(w[0]);
        case GateKind::T:
            return Monomial::cub(w[0]);
        case GateKind::CZ:
            return Monomial::prod2(w[0], w[1]);
        case GateKind::CS:
            return Monomial::lin_quad(w[0], w[1]);
        case GateKind::SC:
            return Monomial::lin_quad(w[1], w[0]);
        case GateKind::CCZ:
            return Monomial::prod3(w[0], w[1], w[2]);
        default:
            return Monomial::constant();
    }
}

}  // namespace

PhaseAffineSem interpret(const Circuit &c, std::optional<Fragment> at_least) {
    Fragment f = infer_fragment(c);
    if (at_least && *at_least > f) {
        f = *at_least;
    }
    require_fragment(f, c.ctx());
    const std::size_t n = c.n();
    AffineMap g = AffineMap::identity(c.ctx(), n);
    detail::DenseAccumulator acc(c.ctx(), n, static_cast<int>(f));
    for (const Gate &gate : c.gates()) {
        if (is_affine(gate.kind)) {
            g.post_apply(to_affine_gate(gate));
            continue;
        }
        // The phase is read off the current labels, i.e. substituted through g.
        detail::LinearForms forms{n, g.matrix().data(), g.translation().data()};
        acc.add_substituted(gate_monomial(gate), gate.arg, forms);
    }
    return {std::move(g), acc.to_poly(), f};
}

PhaseAffineSem compose(const PhaseAffineSem &s2, const PhaseAffineSem &s1) {
    PhasePoly q = s1.q + substitute_affine(s2.q, s1.g);
    return {compose(s2.g, s1.g), std::move(q), std::max(s1.fragment, s2.fragment)};
}

PhaseAffineSem tensor(const PhaseAffineSem &s1, const PhaseAffineSem &s2) {
    Fragment f = std::max(s1.fragment, s2.fragment);
    std::size_t n1 = s1.n();
    PhasePoly q(s1.ctx(), n1 + s2.n(), static_cast<int>(f));
    for (const auto &[m, c] : s1.q.terms()) {
        q.add_term(m, c);
    }
    auto shift = static_cast<std::uint32_t>(n1);
    for (const auto &[m0, c] : s2.q.terms()) {
        Monomial m = m0;
        for (std::size_t i = 0; i < m.arity(); ++i) {
            m.w[i] += shift;
        }
        q.add_term(m, c);
    }
    return {block_sum(s1.g, s2.g), std::move(q), f};
}

std::vector<std::uint64_t> point_of_index(std::uint64_t index, std::size_t n, std::uint64_t d) {
    std::vector<std::uint64_t> x(n, 0);
    for (std::size_t i = n; i-- > 0;) {
        x[i] = index % d;
        index /= d;
    }
    return x;
}

std::uint64_t index_of_point(const std::vector<std::uint64_t> &x, std::uint64_t d) {
    std::uint64_t idx = 0;
    for (std::uint64_t v : x) {
        idx = idx * d + v;
    }
    return idx;
}

std::uint64_t state_space_size(const FieldCtx &ctx, std::size_t n, std::uint64_t cap) {
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (size > cap / ctx.modulus()) {
            throw Error(ErrorKind::StateSpaceTooLarge,
                        std::to_string(ctx.modulus()) + "^" + std::to_string(n) +
                            " basis states exceed the cap of " + std::to_string(cap));
        }
        size *= ctx.modulus();
    }
    if (size > cap) {
        throw Error(ErrorKind::StateSpaceTooLarge, "basis states exceed the cap of " + std::to_string(cap));
    }
    return size;
}

BasisTable oracle_table(const Circuit &c, std::uint64_t cap) {
    const FieldCtx &f = c.ctx();
    const std::uint64_t d = f.modulus();
    const std::size_t n = c.n();
    std::uint64_t size = state_space_size(f, n, cap);
    BasisTable t{n, d, std::vector<std::uint64_t>(size), std::vector<std::uint64_t>(size)};
    std::vector<std::uint64_t> x(n);
    for (std::uint64_t idx = 0; idx < size; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t i = n; i-- > 0;) {
            x[i] = rest % d;
            rest /= d;
        }
        std::uint64_t ph = 0;
        for (const Gate &g : c.gates()) {
            const auto &w = g.wires;
            const std::uint64_t p = g.arg;
            switch (g.kind) {
                case GateKind::X:
                    x[w[0]] = (x[w[0]] + p) % d;
                    break;
                case GateKind::M:
                    x[w[0]] = f.mul(x[w[0]], p);
                    break;
                case GateKind::CX:
                    x[w[1]] = (x[w[1]] + f.mul(p, x[w[0]])) % d;
                    break;
                case GateKind::SWAP:
                    std::swap(x[w[0]], x[w[1]]);
                    break;
                case GateKind::Z:
                    ph = f.add(ph, f.mul(p, x[w[0]]));
                    break;
                case GateKind::S:
                    ph = f.add(ph, f.mul(p, f.binom2(x[w[0]])));
                    break;
                case GateKind::T:
                    ph = f.add(ph, f.mul(p, f.binom3(x[w[0]])));
                    break;
                case GateKind::W:
                    ph = f.add(ph, p);
                    break;
                case GateKind::CZ:
                    ph = f.add(ph, f.mul(p, f.mul(x[w[0]], x[w[1]])));
                    break;
                case GateKind::CS:
                    ph = f.add(ph, f.mul(p, f.mul(x[w[0]], f.binom2(x[w[1]]))));
                    break;
                case GateKind::SC:
                    ph = f.add(ph, f.mul(p, f.mul(x[w[1]], f.binom2(x[w[0]]))));
                    break;
                case GateKind::CCZ:
                    ph = f.add(ph, f.mul(p, f.mul(f.mul(x[w[0]], x[w[1]]), x[w[2]])));
                    break;
            }
        }
        t.image[idx] = index_of_point(x, d);
        t.phase[idx] = ph;
    }
    return t;
}

BasisTable table_of(const PhaseAffineSem &sem, std::uint64_t cap) {
    const std::uint64_t d = sem.ctx().modulus();
    const std::size_t n = sem.n();
    std::uint64_t size = state_space_size(sem.ctx(), n, cap);
    BasisTable t{n, d, std::vector<std::uint64_t>(size), std::vector<std::uint64_t>(size)};
    for (std::uint64_t idx = 0; idx < size; ++idx) {
        std::vector<std::uint64_t> x = point_of_index(idx, n, d);
        t.image[idx] = index_of_point(sem.g.apply(x), d);
        t.phase[idx] = sem.q.eval(x);
    }
    return t;
}

bool tables_equal(const BasisTable &a, const BasisTable &b) {
    return a == b;
}

std::optional<std::vector<std::uint64_t>> first_difference(const BasisTable &a, const BasisTable &b) {
    if (a.n != b.n || a.d != b.d) {
        throw Error(ErrorKind::DimensionMismatch, "tables of different shape");
    }
    for (std::size_t i = 0; i < a.image.size(); ++i) {
        if (a.image[i] != b.image[i] || a.phase[i] != b.phase[i]) {
            return point_of_index(i, a.n, a.d);
        }
    }
    return std::nullopt;
}

std::optional<std::vector<std::uint64_t>> find_witness(const PhaseAffineSem &a,
                                                       const PhaseAffineSem &b,
                                                       std::uint64_t cap) {
    if (!(a.ctx() == b.ctx()) || a.n() != b.n()) {
        throw Error(ErrorKind::DimensionMismatch, "semantics of different shape");
    }
    if (a == b) {
        return std::nullopt;
    }
    const FieldCtx &f = a.ctx();
    const std::size_t n = a.n();
    try {
        state_space_size(f, n, cap);
        return first_difference(table_of(a, cap), table_of(b, cap));
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::StateSpaceTooLarge) {
            throw;
        }
    }
    // Fix coordinates one at a time, keeping the smallest value for which
    // the restricted difference is still somewhere nonzero.
    std::vector<std::uint64_t> dm(n * n), e(n);
    for (std::size_t i = 0; i < n * n; ++i) {
        dm[i] = f.sub(a.g.matrix()[i], b.g.matrix()[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        e[i] = f.sub(a.g.b(i), b.g.b(i));
    }
    PhasePoly r = a.q + (-b.q);
    std::vector<std::uint64_t> x(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        bool later_cols = false;
        for (std::size_t row = 0; row < n && !later_cols; ++row) {
            for (std::size_t col = v + 1; col < n; ++col) {
                if (dm[row * n + col] != 0) {
                    later_cols = true;
                    break;
                }
            }
        }
        for (std::uint64_t val = 0; val < f.modulus(); ++val) {
            PhasePoly r2 = r.restrict(v, val);
            std::vector<std::uint64_t> e2 = e;
            bool nonzero = later_cols || !r2.is_zero();
            for (std::size_t row = 0; row < n; ++row) {
                e2[row] = f.add(e2[row], f.mul(dm[row * n + v], val));
                nonzero = nonzero || e2[row] != 0;
            }
            if (nonzero) {
                x[v] = val;
                r = std::move(r2);
                e = std::move(e2);
                break;
            }
        }
    }
    return x;
}

}  // namespace qupit
