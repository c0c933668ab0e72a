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

#include "qupit/group_presentation.h"

#include <sstream>

#include "qupit/error.h"

namespace qupit {

std::string_view group_family_name(GroupFamily f) {
    switch (f) {
        case GroupFamily::SL:
            return "SL";
        case GroupFamily::GL:
            return "GL";
        case GroupFamily::AGL:
            return "AGL";
    }
    return "?";
}

namespace {

AffineMap letter_map(const Letter &l, std::size_t n, const FieldCtx &ctx) {
    AffineMap g = AffineMap::identity(ctx, n);
    switch (l.kind) {
        case Letter::Kind::Transvection:
            g.shear(l.i, l.j, 1);
            break;
        case Letter::Kind::Scale:
            g.scale(0, l.k);
            break;
        case Letter::Kind::Translation:
            g.translate(l.i, 1);
            break;
    }
    return g;
}

Letter xt(std::uint32_t i, std::uint32_t j, std::uint64_t p = 1) {
    return {Letter::Kind::Transvection, i, j, 1, p};
}

Letter mk(std::uint64_t k, std::uint64_t p = 1) {
    return {Letter::Kind::Scale, 0, 0, k, p};
}

Letter tr(std::uint32_t i, std::uint64_t p = 1) {
    return {Letter::Kind::Translation, i, 0, 1, p};
}

Word inverse_word(const Word &w, const FieldCtx &ctx) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        Letter l = *it;
        if (l.kind == Letter::Kind::Scale) {
            l.k = ctx.inv(l.k);
        } else {
            l.power = ctx.neg(ctx.reduce_unsigned(l.power));
        }
        out.push_back(l);
    }
    return out;
}

Word concat(Word a, const Word &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

AffineMap evaluate_word(const Word &w, std::size_t n, const FieldCtx &ctx) {
    AffineMap acc = AffineMap::identity(ctx, n);
    for (const Letter &l : w) {
        if ((l.kind != Letter::Kind::Scale && l.i >= n) ||
            (l.kind == Letter::Kind::Transvection && (l.j >= n || l.i == l.j))) {
            throw Error(ErrorKind::BadWires, "letter index out of range");
        }
        AffineMap g = letter_map(l, n, ctx);
        for (std::uint64_t p = 0; p < l.power; ++p) {
            acc = compose(acc, g);
        }
    }
    return acc;
}

std::string GroupRelation::label() const {
    std::ostringstream os;
    os << id;
    for (const auto &[k, v] : params) {
        os << ' ' << k << '=' << v;
    }
    return os.str();
}

std::vector<GroupRelation> group_relations(std::size_t n, const FieldCtx &ctx, GroupFamily family) {
    if (n < 2) {
        throw Error(ErrorKind::BadParameter, "group presentations need n >= 2");
    }
    const std::uint64_t d = ctx.modulus();
    auto nn = static_cast<std::uint32_t>(n);
    std::vector<GroupRelation> out;
    for (std::uint32_t i = 0; i < nn; ++i) {
        for (std::uint32_t j = 0; j < nn; ++j) {
            if (i != j) {
                out.push_back({"Stein1", {{"i", i}, {"j", j}}, {xt(i, j, d)}, {}});
            }
        }
    }
    for (std::uint32_t i = 0; i < nn; ++i) {
        for (std::uint32_t j = 0; j < nn; ++j) {
            for (std::uint32_t k = 0; k < nn; ++k) {
                if (i == j || j == k || i == k) {
                    continue;
                }
                for (std::uint64_t t = 0; t < d; ++t) {
                    for (std::uint64_t u = 0; u < d; ++u) {
                        out.push_back({"Stein2",
                                       {{"i", i}, {"j", j}, {"k", k}, {"t", t}, {"u", u}},
                                       {xt(i, k, ctx.mul(t, u)), xt(i, j, t), xt(j, k, u)},
                                       {xt(j, k, u), xt(i, j, t)}});
                    }
                }
            }
        }
    }
    for (std::uint32_t i = 0; i < nn; ++i) {
        for (std::uint32_t j = 0; j < nn; ++j) {
            for (std::uint32_t k = 0; k < nn; ++k) {
                for (std::uint32_t l = 0; l < nn; ++l) {
                    if (i == j || k == l || i == l || j == k) {
                        continue;
                    }
                    out.push_back({"Stein3",
                                   {{"i", i}, {"j", j}, {"k", k}, {"l", l}},
                                   {xt(i, j), xt(k, l)},
                                   {xt(k, l), xt(i, j)}});
                }
            }
        }
    }
    if (n == 2) {
        auto w = [&](std::uint64_t a) {
            std::uint64_t e = ctx.neg(ctx.inv(a));
            return Word{xt(0, 1, e), xt(1, 0, a), xt(0, 1, e)};
        };
        auto h = [&](std::uint64_t a) { return concat(w(a), inverse_word(w(1), ctx)); };
        for (std::uint64_t a = 1; a < d; ++a) {
            for (std::uint64_t b = 1; b < d; ++b) {
                out.push_back({"Torus", {{"a", a}, {"b", b}}, concat(h(a), h(b)), h(ctx.mul(a, b))});
            }
        }
        out.push_back({"Weyl",
                       {},
                       concat(concat(w(1), {xt(1, 0)}), inverse_word(w(1), ctx)),
                       {xt(0, 1, d - 1)}});
    }
    if (family == GroupFamily::SL) {
        return out;
    }
    out.push_back({"mult1", {}, {mk(1)}, {}});
    for (std::uint64_t k = 1; k < d; ++k) {
        for (std::uint64_t l = 1; l < d; ++l) {
            out.push_back({"multM", {{"k", k}, {"l", l}}, {mk(k), mk(l)}, {mk(ctx.mul(k, l))}});
        }
    }
    for (std::uint64_t x = 1; x < d; ++x) {
        for (std::uint32_t i = 1; i < nn; ++i) {
            out.push_back({"MCx", {{"i", i}, {"x", x}}, {mk(x), xt(i, 0)}, {xt(i, 0, x), mk(x)}});
            out.push_back({"MxC", {{"j", i}, {"x", x}}, {mk(x), xt(0, i, x)}, {xt(0, i), mk(x)}});
        }
        for (std::uint32_t i = 1; i < nn; ++i) {
            for (std::uint32_t j = 1; j < nn; ++j) {
                if (i != j) {
                    out.push_back(
                        {"MCsep", {{"i", i}, {"j", j}, {"x", x}}, {mk(x), xt(i, j)}, {xt(i, j), mk(x)}});
                }
            }
        }
    }
    if (family == GroupFamily::GL) {
        return out;
    }
    for (std::uint32_t i = 0; i < nn; ++i) {
        out.push_back({"Xd", {{"i", i}}, {tr(i, d)}, {}});
        for (std::uint32_t j = 0; j < nn; ++j) {
            if (i == j) {
                continue;
            }
            out.push_back({"Xcom", {{"i", i}, {"j", j}}, {tr(i), tr(j)}, {tr(j), tr(i)}});
            out.push_back({"XCx", {{"i", i}, {"j", j}}, {tr(j), xt(i, j)}, {xt(i, j), tr(j)}});
            out.push_back({"XxC", {{"i", i}, {"j", j}}, {xt(i, j), tr(i)}, {tr(i), tr(j), xt(i, j)}});
            for (std::uint32_t s = 0; s < nn; ++s) {
                if (s != i && s != j) {
                    out.push_back({"XCxsep",
                                   {{"s", s}, {"i", i}, {"j", j}},
                                   {tr(s), xt(i, j)},
                                   {xt(i, j), tr(s)}});
                }
            }
        }
    }
    for (std::uint64_t k = 1; k < d; ++k) {
        out.push_back({"XM", {{"k", k}}, {mk(k), tr(0)}, {tr(0, k), mk(k)}});
        for (std::uint32_t i = 1; i < nn; ++i) {
            out.push_back({"XMsep", {{"i", i}, {"k", k}}, {mk(k), tr(i)}, {tr(i), mk(k)}});
        }
    }
    return out;
}

GroupVerdict verify_group_presentation(std::size_t n, const FieldCtx &ctx, GroupFamily family) {
    GroupVerdict v;
    for (const GroupRelation &r : group_relations(n, ctx, family)) {
        ++v.checked;
        if (!(evaluate_word(r.lhs, n, ctx) == evaluate_word(r.rhs, n, ctx))) {
            v.failures.push_back(r.label() + " n=" + std::to_string(n) + " d=" +
                                 std::to_string(ctx.modulus()));
        }
    }
    return v;
}

}  // namespace qupit
