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

#include "qupit/normal_form.h"

#include <string>
#include <unordered_map>

#include "qupit/error.h"

namespace qupit {

namespace {

std::size_t pairs(std::size_t n) {
    return n < 2 ? 0 : n * (n - 1) / 2;
}

std::size_t triples(std::size_t n) {
    return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
}

}  // namespace

DiagonalNF DiagonalNF::zero(const FieldCtx &ctx, std::size_t n, Fragment fragment) {
    require_fragment(fragment, ctx);
    DiagonalNF nf(ctx);
    nf.n = n;
    nf.fragment = fragment;
    int cap = max_degree_cap(ctx);
    nf.z.assign(n, 0);
    if (cap >= 2) {
        nf.s.assign(n, 0);
        nf.cz.assign(pairs(n), 0);
    }
    if (cap >= 3) {
        nf.t.assign(n, 0);
        nf.cs.assign(pairs(n), 0);
        nf.sc.assign(pairs(n), 0);
        nf.ccz.assign(triples(n), 0);
    }
    return nf;
}

std::size_t DiagonalNF::pair_index(std::size_t i, std::size_t j) const {
    return MonomialIndexer(n, 2).pair_rank(i, j);
}

std::size_t DiagonalNF::triple_index(std::size_t i, std::size_t j, std::size_t k) const {
    return MonomialIndexer(n, 3).triple_rank(i, j, k);
}

DiagonalNF DiagonalNF::from_poly(const PhasePoly &q, Fragment fragment) {
    DiagonalNF nf = zero(q.ctx(), q.n(), fragment);
    MonomialIndexer ix(q.n(), 3);
    for (const auto &[m, c] : q.terms()) {
        const auto &w = m.w;
        switch (m.kind) {
            case MonoKind::Const:
                nf.w = c;
                break;
            case MonoKind::Lin:
                nf.z[w[0]] = c;
                break;
            case MonoKind::Quad:
                nf.s[w[0]] = c;
                break;
            case MonoKind::Cub:
                nf.t[w[0]] = c;
                break;
            case MonoKind::Prod2:
                nf.cz[ix.pair_rank(w[0], w[1])] = c;
                break;
            case MonoKind::LinQuad:
                if (w[0] < w[1]) {
                    nf.cs[ix.pair_rank(w[0], w[1])] = c;
                } else {
                    nf.sc[ix.pair_rank(w[1], w[0])] = c;
                }
                break;
            case MonoKind::Prod3:
                nf.ccz[ix.triple_rank(w[0], w[1], w[2])] = c;
                break;
        }
    }
    return nf;
}

PhasePoly DiagonalNF::to_poly() const {
    PhasePoly q(ctx, n, static_cast<int>(fragment));
    q.widen(max_degree_cap(ctx));
    q.set(Monomial::constant(), w);
    auto nn = static_cast<std::uint32_t>(n);
    for (std::uint32_t i = 0; i < nn; ++i) {
        q.set(Monomial::lin(i), z[i]);
        if (!s.empty()) {
            q.set(Monomial::quad(i), s[i]);
        }
        if (!t.empty()) {
            q.set(Monomial::cub(i), t[i]);
        }
    }
    std::size_t p = 0;
    for (std::uint32_t i = 0; i < nn; ++i) {
        for (std::uint32_t j = i + 1; j < nn; ++j, ++p) {
            if (!cz.empty()) {
                q.set(Monomial::prod2(i, j), cz[p]);
            }
            if (!cs.empty()) {
                q.set(Monomial::lin_quad(i, j), cs[p]);
                q.set(Monomial::lin_quad(j, i), sc[p]);
            }
        }
    }
    std::size_t r = 0;
    for (std::uint32_t i = 0; i < nn && !ccz.empty(); ++i) {
        for (std::uint32_t j = i + 1; j < nn; ++j) {
            for (std::uint32_t k = j + 1; k < nn; ++k, ++r) {
                q.set(Monomial::prod3(i, j, k), ccz[r]);
            }
        }
    }
    return q;
}

bool operator==(const DiagonalNF &a, const DiagonalNF &b) noexcept {
    return a.ctx == b.ctx && a.n == b.n && a.w == b.w && a.z == b.z && a.s == b.s && a.t == b.t &&
           a.cz == b.cz && a.cs == b.cs && a.sc == b.sc && a.ccz == b.ccz;
}

PhaseAffineNF normal_form_of(const PhaseAffineSem &sem) {
    return {DiagonalNF::from_poly(sem.q, sem.fragment), synthesize(sem.g)};
}

PhaseAffineNF normalize(const Circuit &c, std::optional<Fragment> at_least) {
    return normal_form_of(interpret(c, at_least));
}

Circuit render(const PhaseAffineNF &nf) {
    const DiagonalNF &dg = nf.diag;
    Circuit c(dg.ctx, dg.n);
    auto p = [](std::uint64_t v) { return static_cast<std::int64_t>(v); };
    c.append(GateKind::W, {}, p(dg.w));
    auto nn = static_cast<std::uint32_t>(dg.n);
    for (std::uint32_t i = 0; i < nn; ++i) {
        c.append(GateKind::Z, {i}, p(dg.z[i]));
        if (!dg.s.empty()) {
            c.append(GateKind::S, {i}, p(dg.s[i]));
        }
        if (!dg.t.empty()) {
            c.append(GateKind::T, {i}, p(dg.t[i]));
        }
    }
    struct Block {
        const std::vector<std::uint64_t> *coeffs;
        GateKind kind;
    };
    for (Block b : {Block{&dg.cz, GateKind::CZ}, Block{&dg.cs, GateKind::CS}, Block{&dg.sc, GateKind::SC}}) {
        if (b.coeffs->empty()) {
            continue;
        }
        std::size_t r = 0;
        for (std::uint32_t i = 0; i < nn; ++i) {
            for (std::uint32_t j = i + 1; j < nn; ++j, ++r) {
                c.append(b.kind, {i, j}, p((*b.coeffs)[r]));
            }
        }
    }
    std::size_t r = 0;
    for (std::uint32_t i = 0; i < nn && !dg.ccz.empty(); ++i) {
        for (std::uint32_t j = i + 1; j < nn; ++j) {
            for (std::uint32_t k = j + 1; k < nn; ++k, ++r) {
                c.append(GateKind::CCZ, {i, j, k}, p(dg.ccz[r]));
            }
        }
    }
    append_affine(c, nf.aff);
    return c;
}

bool equivalent(const Circuit &c1, const Circuit &c2) {
    if (!(c1.ctx() == c2.ctx()) || c1.n() != c2.n()) {
        throw Error(ErrorKind::DimensionMismatch,
                    "circuits differ in shape: d=" + std::to_string(c1.ctx().modulus()) +
                        " n=" + std::to_string(c1.n()) + " vs d=" +
                        std::to_string(c2.ctx().modulus()) + " n=" + std::to_string(c2.n()));
    }
    return interpret(c1) == interpret(c2);
}

std::size_t diagonal_dimension(std::size_t n, Fragment fragment) {
    return MonomialIndexer(n, static_cast<int>(fragment)).size();
}

BigInt count_diagonal_forms(std::size_t n, Fragment fragment, const FieldCtx &ctx) {
    require_fragment(fragment, ctx);
    return boost::multiprecision::pow(BigInt(ctx.modulus()),
                                      static_cast<unsigned>(diagonal_dimension(n, fragment)));
}

InjectivityReport enumerate_and_check_injectivity(std::size_t n, Fragment fragment,
                                                  const FieldCtx &ctx, std::uint64_t sample_cap) {
    InjectivityReport rep;
    rep.total = count_diagonal_forms(n, fragment, ctx);
    rep.complete = rep.total <= sample_cap;
    rep.checked = rep.complete ? static_cast<std::uint64_t>(rep.total) : sample_cap;
    int cap = static_cast<int>(fragment);
    std::vector<Monomial> basis;
    MonomialIndexer(n, cap).for_each([&](std::size_t, const Monomial &m) { basis.push_back(m); });
    const std::uint64_t d = ctx.modulus();
    std::unordered_map<std::string, std::uint64_t> seen;
    seen.reserve(rep.checked);
    for (std::uint64_t idx = 0; idx < rep.checked; ++idx) {
        PhasePoly q(ctx, n, cap);
        std::uint64_t rest = idx;
        for (const Monomial &m : basis) {
            q.set(m, rest % d);
            rest /= d;
        }
        Circuit c = render({DiagonalNF::from_poly(q, fragment), {}});
        BasisTable tab = oracle_table(c);
        std::string key;
        key.reserve(tab.phase.size() * sizeof(std::uint64_t));
        for (std::uint64_t v : tab.phase) {
            key.append(reinterpret_cast<const char *>(&v), sizeof v);
        }
        auto [it, fresh] = seen.emplace(std::move(key), idx);
        if (!fresh) {
            rep.collisions.emplace_back(it->second, idx);
        }
    }
    return rep;
}

}  // namespace qupit
