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

#include "qupit/phase_poly.h"

#include <algorithm>
#include <sstream>
#include <tuple>
#include <utility>

#include "qupit/error.h"

namespace qupit {

namespace {

std::size_t choose2(std::size_t n) {
    return n < 2 ? 0 : n * (n - 1) / 2;
}

std::size_t choose3(std::size_t n) {
    return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
}

// (block, k1, k2, k3) sort key realising the documented order.
std::tuple<int, std::uint32_t, std::uint32_t, std::uint32_t> order_key(const Monomial &m) {
    switch (m.kind) {
        case MonoKind::Const:
            return {0, 0, 0, 0};
        case MonoKind::Lin:
            return {1, m.w[0], 1, 0};
        case MonoKind::Quad:
            return {1, m.w[0], 2, 0};
        case MonoKind::Cub:
            return {1, m.w[0], 3, 0};
        case MonoKind::Prod2:
            return {2, m.w[0], m.w[1], 0};
        case MonoKind::LinQuad:
            if (m.w[0] < m.w[1]) {
                return {3, m.w[0], m.w[1], 0};
            }
            return {4, m.w[1], m.w[0], 0};
        case MonoKind::Prod3:
            return {5, m.w[0], m.w[1], m.w[2]};
    }
    return {6, 0, 0, 0};
}

constexpr std::uint32_t kNoVar = 0xffffffffu;

struct Factor {
    std::uint32_t var;
    std::uint8_t e;
};

// c * prod C(x_var, e).
struct Term {
    std::uint64_t c = 0;
    std::uint8_t k = 0;
    Factor f[3];
};

Term times(const FieldCtx &ctx, const Term &a, const Term &b) {
    Term t;
    t.c = ctx.mul(a.c, b.c);
    t.k = static_cast<std::uint8_t>(a.k + b.k);
    for (std::uint8_t i = 0; i < a.k; ++i) {
        t.f[i] = a.f[i];
    }
    for (std::uint8_t i = 0; i < b.k; ++i) {
        t.f[a.k + i] = b.f[i];
    }
    return t;
}

// C(x,m) C(x,n) = sum_j coef(m,n,j) C(x,j) for max(m,n) <= j <= m+n.
std::uint64_t product_coeff(unsigned m, unsigned n, unsigned j) {
    static const std::uint64_t fact[7] = {1, 1, 2, 6, 24, 120, 720};
    return fact[j] / (fact[j - m] * fact[j - n] * fact[m + n - j]);
}

template <class Sink>
void emit(const FieldCtx &ctx, Term t, Sink &sink) {
    if (t.c == 0) {
        return;
    }
    std::sort(t.f, t.f + t.k, [](const Factor &a, const Factor &b) { return a.var < b.var; });
    for (std::uint8_t i = 0; i + 1 < t.k; ++i) {
        if (t.f[i].var != t.f[i + 1].var) {
            continue;
        }
        unsigned m = t.f[i].e;
        unsigned n = t.f[i + 1].e;
        for (unsigned j = std::max(m, n); j <= m + n; ++j) {
            Term u;
            u.c = ctx.mul(t.c, ctx.reduce_unsigned(product_coeff(m, n, j)));
            for (std::uint8_t s = 0; s < t.k; ++s) {
                if (s == i + 1) {
                    continue;
                }
                Factor f = t.f[s];
                if (s == i) {
                    f.e = static_cast<std::uint8_t>(j);
                }
                u.f[u.k++] = f;
            }
            emit(ctx, u, sink);
        }
        return;
    }
    Monomial mono;
    switch (t.k) {
        case 0:
            mono = Monomial::constant();
            break;
        case 1:
            mono.kind = t.f[0].e == 1 ? MonoKind::Lin : (t.f[0].e == 2 ? MonoKind::Quad : MonoKind::Cub);
            mono.w = {t.f[0].var, 0, 0};
            break;
        case 2:
            if (t.f[0].e == 1 && t.f[1].e == 1) {
                mono = Monomial::prod2(t.f[0].var, t.f[1].var);
            } else if (t.f[0].e == 1) {
                mono = Monomial::lin_quad(t.f[0].var, t.f[1].var);
            } else {
                mono = Monomial::lin_quad(t.f[1].var, t.f[0].var);
            }
            break;
        default:
            mono = Monomial::prod3(t.f[0].var, t.f[1].var, t.f[2].var);
            break;
    }
    sink(mono, t.c);
}

// A summand of a linear form: a * x_var, or the constant a when var = kNoVar.
struct Atom {
    std::uint32_t var;
    std::uint64_t a;
};

void atoms_of(const detail::LinearForms &forms, std::uint32_t v, std::vector<Atom> &out) {
    out.clear();
    const std::uint64_t *row = forms.a + static_cast<std::size_t>(v) * forms.n;
    for (std::size_t k = 0; k < forms.n; ++k) {
        if (row[k] != 0) {
            out.push_back({static_cast<std::uint32_t>(k), row[k]});
        }
    }
    if (forms.b[v] != 0) {
        out.push_back({kNoVar, forms.b[v]});
    }
}

Term lin_of(const Atom &u) {
    Term t;
    t.c = u.a;
    if (u.var != kNoVar) {
        t.f[t.k++] = {u.var, 1};
    }
    return t;
}

// C(u,2) as at most two terms.
int binom2_of(const FieldCtx &ctx, const Atom &u, Term out[2]) {
    if (u.var == kNoVar) {
        out[0] = Term{};
        out[0].c = ctx.binom2(u.a);
        return 1;
    }
    out[0] = Term{};
    out[0].c = ctx.mul(u.a, u.a);
    out[0].f[out[0].k++] = {u.var, 2};
    out[1] = Term{};
    out[1].c = ctx.binom2(u.a);
    out[1].f[out[1].k++] = {u.var, 1};
    return 2;
}

// C(u,3) as at most three terms.
int binom3_of(const FieldCtx &ctx, const Atom &u, Term out[3]) {
    if (u.var == kNoVar) {
        out[0] = Term{};
        out[0].c = ctx.binom3(u.a);
        return 1;
    }
    out[0] = Term{};
    out[0].c = ctx.mul(ctx.mul(u.a, u.a), u.a);
    out[0].f[out[0].k++] = {u.var, 3};
    out[1] = Term{};
    out[1].c = ctx.mul(ctx.mul(2, u.a), ctx.binom2(u.a));
    out[1].f[out[1].k++] = {u.var, 2};
    out[2] = Term{};
    out[2].c = ctx.binom3(u.a);
    out[2].f[out[2].k++] = {u.var, 1};
    return 3;
}

// C(L,2) for L = sum of atoms, folded over the summands.
void binom2_terms(const FieldCtx &ctx, const std::vector<Atom> &l, std::vector<Term> &out) {
    out.clear();
    Term tmp[2];
    for (std::size_t i = 0; i < l.size(); ++i) {
        int cnt = binom2_of(ctx, l[i], tmp);
        for (int s = 0; s < cnt; ++s) {
            out.push_back(tmp[s]);
        }
        Term ti = lin_of(l[i]);
        for (std::size_t j = i + 1; j < l.size(); ++j) {
            out.push_back(times(ctx, ti, lin_of(l[j])));
        }
    }
}

template <class Sink>
void expand(const FieldCtx &ctx, const Monomial &m, std::uint64_t c, const detail::LinearForms &forms,
            Sink &sink) {
    c = ctx.reduce_unsigned(c);
    if (c == 0) {
        return;
    }
    Term scale;
    scale.c = c;
    thread_local std::vector<Atom> la, lb, lc;
    thread_local std::vector<Term> pieces;
    switch (m.kind) {
        case MonoKind::Const:
            sink(Monomial::constant(), c);
            return;
        case MonoKind::Lin:
            atoms_of(forms, m.w[0], la);
            for (const Atom &u : la) {
                emit(ctx, times(ctx, scale, lin_of(u)), sink);
            }
            return;
        case MonoKind::Quad:
            atoms_of(forms, m.w[0], la);
            binom2_terms(ctx, la, pieces);
            for (const Term &t : pieces) {
                emit(ctx, times(ctx, scale, t), sink);
            }
            return;
        case MonoKind::Cub: {
            atoms_of(forms, m.w[0], la);
            Term tmp[3];
            for (std::size_t i = 0; i < la.size(); ++i) {
                int cnt = binom3_of(ctx, la[i], tmp);
                for (int s = 0; s < cnt; ++s) {
                    emit(ctx, times(ctx, scale, tmp[s]), sink);
                }
                cnt = binom2_of(ctx, la[i], tmp);
                for (std::size_t j = 0; j < la.size(); ++j) {
                    if (j == i) {
                        continue;
                    }
                    Term lj = times(ctx, scale, lin_of(la[j]));
                    for (int s = 0; s < cnt; ++s) {
                        emit(ctx, times(ctx, lj, tmp[s]), sink);
                    }
                }
                Term li = times(ctx, scale, lin_of(la[i]));
                for (std::size_t j = i + 1; j < la.size(); ++j) {
                    Term lij = times(ctx, li, lin_of(la[j]));
                    for (std::size_t k = j + 1; k < la.size(); ++k) {
                        emit(ctx, times(ctx, lij, lin_of(la[k])), sink);
                    }
                }
            }
            return;
        }
        case MonoKind::Prod2:
            atoms_of(forms, m.w[0], la);
            atoms_of(forms, m.w[1], lb);
            for (const Atom &u : la) {
                Term tu = times(ctx, scale, lin_of(u));
                for (const Atom &v : lb) {
                    emit(ctx, times(ctx, tu, lin_of(v)), sink);
                }
            }
            return;
        case MonoKind::LinQuad:
            atoms_of(forms, m.w[0], la);
            atoms_of(forms, m.w[1], lb);
            binom2_terms(ctx, lb, pieces);
            for (const Atom &u : la) {
                Term tu = times(ctx, scale, lin_of(u));
                for (const Term &t : pieces) {
                    emit(ctx, times(ctx, tu, t), sink);
                }
            }
            return;
        case MonoKind::Prod3:
            atoms_of(forms, m.w[0], la);
            atoms_of(forms, m.w[1], lb);
            atoms_of(forms, m.w[2], lc);
            for (const Atom &u : la) {
                Term tu = times(ctx, scale, lin_of(u));
                for (const Atom &v : lb) {
                    Term tuv = times(ctx, tu, lin_of(v));
                    for (const Atom &w : lc) {
                        emit(ctx, times(ctx, tuv, lin_of(w)), sink);
                    }
                }
            }
            return;
    }
}

struct MapSink {
    PhasePoly *q;
    void operator()(const Monomial &m, std::uint64_t c) {
        q->add_term(m, c);
    }
};

}  // namespace

Monomial Monomial::prod2(std::uint32_t i, std::uint32_t j) {
    if (i > j) {
        std::swap(i, j);
    }
    return {MonoKind::Prod2, {i, j, 0}};
}

Monomial Monomial::prod3(std::uint32_t i, std::uint32_t j, std::uint32_t k) {
    std::array<std::uint32_t, 3> w{i, j, k};
    std::sort(w.begin(), w.end());
    return {MonoKind::Prod3, w};
}

int Monomial::degree() const noexcept {
    switch (kind) {
        case MonoKind::Const:
            return 0;
        case MonoKind::Lin:
            return 1;
        case MonoKind::Quad:
        case MonoKind::Prod2:
            return 2;
        default:
            return 3;
    }
}

std::size_t Monomial::arity() const noexcept {
    switch (kind) {
        case MonoKind::Const:
            return 0;
        case MonoKind::Lin:
        case MonoKind::Quad:
        case MonoKind::Cub:
            return 1;
        case MonoKind::Prod2:
        case MonoKind::LinQuad:
            return 2;
        case MonoKind::Prod3:
            return 3;
    }
    return 0;
}

std::uint32_t Monomial::max_wire() const noexcept {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < arity(); ++i) {
        r = std::max(r, w[i]);
    }
    return r;
}

std::string Monomial::kind_name() const {
    switch (kind) {
        case MonoKind::Const:
            return "const";
        case MonoKind::Lin:
            return "lin";
        case MonoKind::Quad:
            return "quad";
        case MonoKind::Cub:
            return "cub";
        case MonoKind::Prod2:
            return "prod2";
        case MonoKind::LinQuad:
            return "linquad";
        case MonoKind::Prod3:
            return "prod3";
    }
    return "?";
}

std::string Monomial::to_string() const {
    std::ostringstream os;
    switch (kind) {
        case MonoKind::Const:
            os << "1";
            break;
        case MonoKind::Lin:
            os << "x" << w[0];
            break;
        case MonoKind::Quad:
            os << "C(x" << w[0] << ",2)";
            break;
        case MonoKind::Cub:
            os << "C(x" << w[0] << ",3)";
            break;
        case MonoKind::Prod2:
            os << "x" << w[0] << "*x" << w[1];
            break;
        case MonoKind::LinQuad:
            os << "x" << w[0] << "*C(x" << w[1] << ",2)";
            break;
        case MonoKind::Prod3:
            os << "x" << w[0] << "*x" << w[1] << "*x" << w[2];
            break;
    }
    return os.str();
}

bool operator==(const Monomial &a, const Monomial &b) noexcept {
    if (a.kind != b.kind) {
        return false;
    }
    for (std::size_t i = 0; i < a.arity(); ++i) {
        if (a.w[i] != b.w[i]) {
            return false;
        }
    }
    return true;
}

bool operator<(const Monomial &a, const Monomial &b) noexcept {
    return order_key(a) < order_key(b);
}

MonomialIndexer::MonomialIndexer(std::size_t n, int cap) : n_(n), cap_(cap) {
    per_wire_ = static_cast<std::size_t>(cap);
    off_prod2_ = 1 + per_wire_ * n;
    std::size_t pairs = choose2(n);
    off_cs_ = off_prod2_ + (cap >= 2 ? pairs : 0);
    off_sc_ = off_cs_ + (cap >= 3 ? pairs : 0);
    off_prod3_ = off_sc_ + (cap >= 3 ? pairs : 0);
    size_ = off_prod3_ + (cap >= 3 ? choose3(n) : 0);
}

std::size_t MonomialIndexer::pair_rank(std::size_t i, std::size_t j) const noexcept {
    return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
}

std::size_t MonomialIndexer::triple_rank(std::size_t i, std::size_t j, std::size_t k) const noexcept {
    return choose3(n_) - choose3(n_ - i) + choose2(n_ - i - 1) - choose2(n_ - j) + (k - j - 1);
}

std::size_t MonomialIndexer::index(const Monomial &m) const noexcept {
    switch (m.kind) {
        case MonoKind::Const:
            return 0;
        case MonoKind::Lin:
            return 1 + per_wire_ * m.w[0];
        case MonoKind::Quad:
            return 2 + per_wire_ * m.w[0];
        case MonoKind::Cub:
            return 3 + per_wire_ * m.w[0];
        case MonoKind::Prod2:
            return off_prod2_ + pair_rank(m.w[0], m.w[1]);
        case MonoKind::LinQuad:
            if (m.w[0] < m.w[1]) {
                return off_cs_ + pair_rank(m.w[0], m.w[1]);
            }
            return off_sc_ + pair_rank(m.w[1], m.w[0]);
        case MonoKind::Prod3:
            return off_prod3_ + triple_rank(m.w[0], m.w[1], m.w[2]);
    }
    return 0;
}

void MonomialIndexer::for_each(const std::function<void(std::size_t, const Monomial &)> &fn) const {
    std::size_t idx = 0;
    fn(idx++, Monomial::constant());
    for (std::uint32_t i = 0; i < n_; ++i) {
        fn(idx++, Monomial::lin(i));
        if (cap_ >= 2) {
            fn(idx++, Monomial::quad(i));
        }
        if (cap_ >= 3) {
            fn(idx++, Monomial::cub(i));
        }
    }
    if (cap_ < 2) {
        return;
    }
    auto n = static_cast<std::uint32_t>(n_);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            fn(idx++, Monomial::prod2(i, j));
        }
    }
    if (cap_ < 3) {
        return;
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            fn(idx++, Monomial::lin_quad(i, j));
        }
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            fn(idx++, Monomial::lin_quad(j, i));
        }
    }
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            for (std::uint32_t k = j + 1; k < n; ++k) {
                fn(idx++, Monomial::prod3(i, j, k));
            }
        }
    }
}

int diagonal_degree(DiagonalKind kind) {
    switch (kind) {
        case DiagonalKind::Z:
        case DiagonalKind::W:
            return 1;
        case DiagonalKind::S:
        case DiagonalKind::CZ:
            return 2;
        default:
            return 3;
    }
}

int max_degree_cap(const FieldCtx &ctx) {
    return ctx.has_cubic() ? 3 : (ctx.has_quadratic() ? 2 : 1);
}

static void check_cap(const FieldCtx &ctx, int cap) {
    if (cap < 1 || cap > 3) {
        throw Error(ErrorKind::BadParameter, "degree cap must be 1, 2 or 3");
    }
    if (cap > max_degree_cap(ctx)) {
        throw Error(ErrorKind::FragmentUnavailable,
                    "degree " + std::to_string(cap) + " phases are unavailable at d=" +
                        std::to_string(ctx.modulus()));
    }
}

PhasePoly::PhasePoly(const FieldCtx &ctx, std::size_t n, int degree_cap)
    : ctx_(ctx), n_(n), cap_(degree_cap) {
    check_cap(ctx, degree_cap);
}

PhasePoly PhasePoly::from_generator(DiagonalKind kind, const std::vector<std::uint32_t> &wires,
                                    std::uint64_t power, std::size_t n, const FieldCtx &ctx) {
    PhasePoly q(ctx, n, diagonal_degree(kind));
    std::size_t arity = 0;
    switch (kind) {
        case DiagonalKind::W:
            arity = 0;
            break;
        case DiagonalKind::Z:
        case DiagonalKind::S:
        case DiagonalKind::T:
            arity = 1;
            break;
        case DiagonalKind::CZ:
        case DiagonalKind::CS:
        case DiagonalKind::SC:
            arity = 2;
            break;
        case DiagonalKind::CCZ:
            arity = 3;
            break;
    }
    if (wires.size() != arity) {
        throw Error(ErrorKind::BadWires, "diagonal generator expects " + std::to_string(arity) +
                                             " wires, got " + std::to_string(wires.size()));
    }
    for (std::size_t i = 0; i < arity; ++i) {
        if (wires[i] >= n) {
            throw Error(ErrorKind::BadWires, "wire " + std::to_string(wires[i]) + " out of range");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (wires[i] == wires[j]) {
                throw Error(ErrorKind::BadWires, "repeated wire " + std::to_string(wires[i]));
            }
        }
    }
    power = ctx.reduce_unsigned(power);
    if (power == 0) {
        return q;
    }
    Monomial m;
    switch (kind) {
        case DiagonalKind::W:
            m = Monomial::constant();
            break;
        case DiagonalKind::Z:
            m = Monomial::lin(wires[0]);
            break;
        case DiagonalKind::S:
            m = Monomial::quad(wires[0]);
            break;
        case DiagonalKind::T:
            m = Monomial::cub(wires[0]);
            break;
        case DiagonalKind::CZ:
            m = Monomial::prod2(wires[0], wires[1]);
            break;
        case DiagonalKind::CS:
            m = Monomial::lin_quad(wires[0], wires[1]);
            break;
        case DiagonalKind::SC:
            m = Monomial::lin_quad(wires[1], wires[0]);
            break;
        case DiagonalKind::CCZ:
            m = Monomial::prod3(wires[0], wires[1], wires[2]);
            break;
    }
    q.terms_[m] = power;
    return q;
}

int PhasePoly::max_degree() const noexcept {
    int d = 0;
    for (const auto &[m, c] : terms_) {
        d = std::max(d, m.degree());
    }
    return d;
}

std::uint64_t PhasePoly::coeff(const Monomial &m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? 0 : it->second;
}

void PhasePoly::check_fits(const Monomial &m) const {
    if (m.arity() > 0 && m.max_wire() >= n_) {
        throw Error(ErrorKind::BadWires, "monomial " + m.to_string() + " exceeds " +
                                             std::to_string(n_) + " wires");
    }
    if (m.degree() > cap_) {
        throw Error(ErrorKind::FragmentUnavailable,
                    "monomial " + m.to_string() + " exceeds degree cap " + std::to_string(cap_));
    }
}

void PhasePoly::add_term(const Monomial &m, std::uint64_t c) {
    c = ctx_.reduce_unsigned(c);
    if (c == 0) {
        return;
    }
    check_fits(m);
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second = ctx_.add(it->second, c);
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

void PhasePoly::set(const Monomial &m, std::uint64_t c) {
    c = ctx_.reduce_unsigned(c);
    check_fits(m);
    if (c == 0) {
        terms_.erase(m);
    } else {
        terms_[m] = c;
    }
}

void PhasePoly::widen(int cap) {
    if (cap > cap_) {
        check_cap(ctx_, cap);
        cap_ = cap;
    }
}

std::uint64_t eval_monomial(const FieldCtx &ctx, const Monomial &m,
                            const std::vector<std::uint64_t> &x) {
    switch (m.kind) {
        case MonoKind::Const:
            return 1;
        case MonoKind::Lin:
            return x[m.w[0]];
        case MonoKind::Quad:
            return ctx.binom2(x[m.w[0]]);
        case MonoKind::Cub:
            return ctx.binom3(x[m.w[0]]);
        case MonoKind::Prod2:
            return ctx.mul(x[m.w[0]], x[m.w[1]]);
        case MonoKind::LinQuad:
            return ctx.mul(x[m.w[0]], ctx.binom2(x[m.w[1]]));
        case MonoKind::Prod3:
            return ctx.mul(ctx.mul(x[m.w[0]], x[m.w[1]]), x[m.w[2]]);
    }
    return 0;
}

std::uint64_t PhasePoly::eval(const std::vector<std::uint64_t> &x) const {
    if (x.size() != n_) {
        throw Error(ErrorKind::DimensionMismatch, "point has " + std::to_string(x.size()) +
                                                      " coordinates, expected " +
                                                      std::to_string(n_));
    }
    std::vector<std::uint64_t> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        r[i] = ctx_.reduce_unsigned(x[i]);
    }
    std::uint64_t acc = 0;
    for (const auto &[m, c] : terms_) {
        acc = ctx_.add(acc, ctx_.mul(c, eval_monomial(ctx_, m, r)));
    }
    return acc;
}

FieldElem PhasePoly::eval(const std::vector<FieldElem> &x) const {
    std::vector<std::uint64_t> raw;
    raw.reserve(x.size());
    for (const auto &e : x) {
        if (!(e.ctx() == ctx_)) {
            throw Error(ErrorKind::ModulusMismatch, "point and polynomial use different moduli");
        }
        raw.push_back(e.value());
    }
    return FieldElem::from_residue(ctx_, eval(raw));
}

PhasePoly PhasePoly::restrict(std::size_t var, std::uint64_t value) const {
    if (var >= n_) {
        throw Error(ErrorKind::BadWires, "variable out of range");
    }
    std::vector<std::uint64_t> a(n_ * n_, 0);
    std::vector<std::uint64_t> b(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
        a[i * n_ + i] = 1;
    }
    a[var * n_ + var] = 0;
    b[var] = ctx_.reduce_unsigned(value);
    detail::LinearForms forms{n_, a.data(), b.data()};
    PhasePoly out(ctx_, n_, cap_);
    MapSink sink{&out};
    for (const auto &[m, c] : terms_) {
        expand(ctx_, m, c, forms, sink);
    }
    return out;
}

PhasePoly add(const PhasePoly &a, const PhasePoly &b) {
    if (!(a.ctx() == b.ctx()) || a.n() != b.n()) {
        throw Error(ErrorKind::DimensionMismatch, "cannot add phase polynomials of different shape");
    }
    PhasePoly out = a;
    out.widen(b.degree_cap());
    for (const auto &[m, c] : b.terms()) {
        out.add_term(m, c);
    }
    return out;
}

PhasePoly operator+(const PhasePoly &a, const PhasePoly &b) {
    return add(a, b);
}

PhasePoly operator-(const PhasePoly &a) {
    PhasePoly out(a.ctx(), a.n(), a.degree_cap());
    for (const auto &[m, c] : a.terms()) {
        out.set(m, a.ctx().neg(c));
    }
    return out;
}

PhasePoly substitute_affine(const PhasePoly &q, const AffineMap &g) {
    if (!(q.ctx() == g.ctx()) || q.n() != g.n()) {
        throw Error(ErrorKind::DimensionMismatch, "polynomial and affine map differ in shape");
    }
    detail::LinearForms forms{g.n(), g.matrix().data(), g.translation().data()};
    PhasePoly out(q.ctx(), q.n(), q.degree_cap());
    MapSink sink{&out};
    for (const auto &[m, c] : q.terms()) {
        expand(q.ctx(), m, c, forms, sink);
    }
    return out;
}

namespace detail {

void expand_monomial(const FieldCtx &ctx, const Monomial &m, std::uint64_t c,
                     const LinearForms &forms,
                     const std::function<void(const Monomial &, std::uint64_t)> &sink) {
    auto fwd = [&](const Monomial &mm, std::uint64_t cc) { sink(mm, cc); };
    expand(ctx, m, c, forms, fwd);
}

DenseAccumulator::DenseAccumulator(const FieldCtx &ctx, std::size_t n, int cap)
    : ctx_(ctx), n_(n), cap_(cap), indexer_(n, cap), coeffs_(indexer_.size(), 0) {
    check_cap(ctx, cap);
}

void DenseAccumulator::raise_cap(int cap) {
    if (cap <= cap_) {
        return;
    }
    check_cap(ctx_, cap);
    MonomialIndexer wider(n_, cap);
    std::vector<std::uint64_t> moved(wider.size(), 0);
    indexer_.for_each([&](std::size_t i, const Monomial &m) { moved[wider.index(m)] = coeffs_[i]; });
    indexer_ = wider;
    coeffs_ = std::move(moved);
    cap_ = cap;
}

void DenseAccumulator::add_substituted(const Monomial &m, std::uint64_t c, const LinearForms &forms) {
    auto sink = [this](const Monomial &mm, std::uint64_t cc) { add(mm, cc); };
    expand(ctx_, m, c, forms, sink);
}

PhasePoly DenseAccumulator::to_poly() const {
    PhasePoly q(ctx_, n_, cap_);
    indexer_.for_each([&](std::size_t i, const Monomial &m) {
        if (coeffs_[i] != 0) {
            q.set(m, coeffs_[i]);
        }
    });
    return q;
}

}  // namespace detail

}  // namespace qupit
