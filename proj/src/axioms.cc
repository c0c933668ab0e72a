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

#include "qupit/axioms.h"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>
#include <tuple>

#include "qupit/error.h"
#include "qupit/group_presentation.h"
#include "qupit/random_circuit.h"

namespace qupit {

std::string_view axiom_family_name(AxiomFamily f) {
    switch (f) {
        case AxiomFamily::Aff:
            return "aff";
        case AxiomFamily::Lin:
            return "lin";
        case AxiomFamily::Quad:
            return "quad";
        case AxiomFamily::Cubic:
            return "cubic";
        case AxiomFamily::TransportTable:
            return "transport";
        case AxiomFamily::CommTable:
            return "comm";
    }
    return "?";
}

std::string AxiomInstance::label() const {
    std::ostringstream os;
    os << id << " d=" << lhs.ctx().modulus();
    for (const auto &[k, v] : params) {
        os << ' ' << k << '=' << v;
    }
    return os.str();
}

namespace {

using K = GateKind;
using Params = std::vector<std::pair<std::string, std::uint64_t>>;

struct G {
    GateKind k;
    std::vector<std::uint32_t> w;
    std::int64_t p = 1;
};
using Gs = std::vector<G>;

std::int64_t s64(std::uint64_t v) {
    return static_cast<std::int64_t>(v);
}

Gs repeat(const G &g, std::uint64_t times) {
    return Gs(times, g);
}

Gs cat(Gs a, const Gs &b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

// Gates for a matrix word: the rightmost letter acts first.
Gs word_gates(const Word &w) {
    Gs out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        for (std::uint64_t p = 0; p < it->power; ++p) {
            switch (it->kind) {
                case Letter::Kind::Transvection:
                    out.push_back({K::CX, {it->i, it->j}});
                    break;
                case Letter::Kind::Scale:
                    out.push_back({K::M, {0}, s64(it->k)});
                    break;
                case Letter::Kind::Translation:
                    out.push_back({K::X, {it->i}});
                    break;
            }
        }
    }
    return out;
}

class Builder {
   public:
    explicit Builder(const FieldCtx &ctx) : f_(ctx) {
    }

    void add(const std::string &id, AxiomFamily fam, Params params, std::size_t n, const Gs &l,
             const Gs &r) {
        for (const Gs *side : {&l, &r}) {
            for (const G &g : *side) {
                if (!gate_allowed(g.k, f_)) {
                    return;
                }
            }
        }
        Circuit lc = build(n, l);
        Circuit rc = build(n, r);
        auto fr = static_cast<Fragment>(
            std::max(static_cast<int>(infer_fragment(lc)), static_cast<int>(infer_fragment(rc))));
        out_.push_back({id, fam, std::move(params), std::move(lc), std::move(rc), fr});
    }

    Circuit build(std::size_t n, const Gs &gs) const {
        Circuit c(f_, n);
        for (const G &g : gs) {
            c.append(g.k, g.w, g.p);
        }
        return c;
    }

    std::vector<AxiomInstance> take() {
        return std::move(out_);
    }

   private:
    FieldCtx f_;
    std::vector<AxiomInstance> out_;
};

void affine_axioms(Builder &b, const FieldCtx &f) {
    const std::uint64_t d = f.modulus();
    const auto A = AxiomFamily::Aff;
    b.add("axiom-mult1", A, {}, 1, {{K::M, {0}, 1}}, {});
    b.add("lafont-axiom-mult1", A, {}, 1, {{K::M, {0}, 1}}, {});
    for (std::uint64_t x = 1; x < d; ++x) {
        std::int64_t xi = s64(f.inv(x));
        for (std::uint64_t y = 1; y < d; ++y) {
            Gs l{{K::M, {0}, s64(x)}, {K::M, {0}, s64(y)}};
            Gs r{{K::M, {0}, s64(f.mul(x, y))}};
            b.add("axiom-multxy", A, {{"x", x}, {"y", y}}, 1, l, r);
            b.add("lafont-axiom-multxy", A, {{"x", x}, {"y", y}}, 1, l, r);
        }
        b.add("axiom-XM-twisted", A, {{"x", x}}, 1, {{K::M, {0}, xi}, {K::X, {0}}, {K::M, {0}, s64(x)}},
              {{K::X, {0}, s64(x)}});
        Gs mc_l{{K::M, {0}, s64(x)}, {K::CX, {0, 1}}, {K::M, {0}, xi}};
        Gs mc_r{{K::CX, {0, 1}, s64(x)}};
        b.add("axiom-multcnot", A, {{"x", x}}, 2, mc_l, mc_r);
        b.add("lafont-3", A, {{"x", x}}, 2, mc_l, mc_r);
        b.add("axiom-multcnot2-twisted", A, {{"x", x}}, 2, {{K::CX, {0, 1}}, {K::M, {1}, s64(x)}},
              {{K::M, {1}, s64(x)}, {K::CX, {0, 1}, s64(x)}});
        b.add("axiom-XM", A, {{"x", x}}, 1, {{K::X, {0}}, {K::M, {0}, s64(x)}},
              {{K::M, {0}, s64(x)}, {K::X, {0}, s64(x)}});
        Gs m2_l{{K::M, {1}, xi}, {K::CX, {0, 1}}, {K::M, {1}, s64(x)}};
        b.add("axiom-multcnot2", A, {{"x", x}}, 2, m2_l, mc_r);
        b.add("lafont-4", A, {{"x", x}}, 2, m2_l, mc_r);
        // SWAP through a CX ladder with arbitrary unit k.
        std::uint64_t k = x;
        b.add("axiom-swap", A, {{"k", k}}, 2, {{K::SWAP, {0, 1}}},
              {{K::CX, {0, 1}, s64(k)},
               {K::CX, {1, 0}, s64(f.neg(f.inv(k)))},
               {K::CX, {0, 1}, s64(k)},
               {K::M, {0}, s64(f.neg(k))},
               {K::M, {1}, s64(f.inv(k))}});
    }
    b.add("axiom-XCNOTtop", A, {}, 2, {{K::X, {0}}, {K::CX, {0, 1}}},
          {{K::CX, {0, 1}}, {K::X, {0}}, {K::X, {1}}});
    b.add("axiom-swap-fixed", A, {}, 2, {{K::SWAP, {0, 1}}},
          {{K::CX, {0, 1}}, {K::CX, {1, 0}, s64(d - 1)}, {K::CX, {0, 1}}, {K::M, {0}, s64(d - 1)}});
    b.add("axiom-I", A, {}, 2, {{K::SWAP, {0, 1}}, {K::X, {0}}}, {{K::X, {1}}, {K::SWAP, {0, 1}}});
    b.add("axiom-Xd", A, {}, 1, repeat({K::X, {0}}, d), {});
    b.add("axiom-d-cnot", A, {}, 2, repeat({K::CX, {0, 1}}, d), {});
    b.add("lafont-8", A, {}, 2, repeat({K::CX, {0, 1}}, d), {});
    b.add("axiom-XCNOT", A, {}, 2, {{K::X, {1}}, {K::CX, {0, 1}}}, {{K::CX, {0, 1}}, {K::X, {1}}});
    for (std::uint64_t s = 1; s < d; ++s) {
        for (std::uint64_t k = 1; k < d; ++k) {
            b.add("axiom-X-change-wires", A, {{"s", s}, {"k", k}}, 2,
                  {{K::X, {0}, s64(k)}, {K::CX, {0, 1}, s64(s)}},
                  {{K::CX, {0, 1}, s64(s)}, {K::X, {0}, s64(k)}, {K::X, {1}, s64(f.mul(s, k))}});
        }
    }
    b.add("lemma-XX-comm", A, {}, 3, {{K::CX, {0, 2}}, {K::CX, {1, 2}}},
          {{K::CX, {1, 2}}, {K::CX, {0, 2}}});
    b.add("lemma-XX2-comm", A, {}, 3, {{K::CX, {0, 1}}, {K::CX, {0, 2}}},
          {{K::CX, {0, 2}}, {K::CX, {0, 1}}});
    b.add("lafont-swapswap", A, {}, 2, {{K::SWAP, {0, 1}}, {K::SWAP, {0, 1}}}, {});
    for (std::uint64_t a = 0; a < d; ++a) {
        for (std::uint64_t c = 0; c < d; ++c) {
            b.add("lafont-5", A, {{"a", a}, {"b", c}}, 2, {{K::CX, {0, 1}, s64(a)}, {K::CX, {0, 1}, s64(c)}},
                  {{K::CX, {0, 1}, s64(f.add(a, c))}});
        }
    }
    b.add("lafont-6", A, {}, 2, {{K::SWAP, {0, 1}}, {K::CX, {0, 1}}, {K::SWAP, {0, 1}}}, {{K::CX, {1, 0}}});
    // The transvection commutator, read as circuits.
    for (std::uint64_t t = 1; t < d; ++t) {
        for (std::uint64_t u = 1; u < d; ++u) {
            Word lw{{Letter::Kind::Transvection, 0, 2, 1, f.mul(t, u)},
                    {Letter::Kind::Transvection, 0, 1, 1, t},
                    {Letter::Kind::Transvection, 1, 2, 1, u}};
            Word rw{{Letter::Kind::Transvection, 1, 2, 1, u}, {Letter::Kind::Transvection, 0, 1, 1, t}};
            b.add("lafont-7", A, {{"t", t}, {"u", u}}, 3, word_gates(lw), word_gates(rw));
        }
    }
    // Torus and Weyl as two-wire circuits.
    for (const GroupRelation &r : group_relations(2, f, GroupFamily::SL)) {
        if (r.id == "Torus") {
            b.add("axiom-torus-derived", A, r.params, 2, word_gates(r.lhs), word_gates(r.rhs));
        } else if (r.id == "Weyl") {
            b.add("axiom-weyl-derived", A, r.params, 2, word_gates(r.lhs), word_gates(r.rhs));
        }
    }
}

void linear_axioms(Builder &b, const FieldCtx &f) {
    const std::uint64_t d = f.modulus();
    const auto L = AxiomFamily::Lin;
    b.add("ax:W-order-d", L, {}, 0, repeat({K::W, {}}, d), {});
    b.add("ax:Z-order-d", L, {}, 1, repeat({K::Z, {0}}, d), {});
    b.add("ax:ZX", L, {}, 1, {{K::X, {0}}, {K::Z, {0}}}, {{K::Z, {0}}, {K::X, {0}}, {K::W, {}}});
    for (std::uint64_t x = 1; x < d; ++x) {
        b.add("ax:ZM", L, {{"x", x}}, 1, {{K::M, {0}, s64(x)}, {K::Z, {0}}},
              {{K::Z, {0}, s64(x)}, {K::M, {0}, s64(x)}});
    }
    b.add("ax:ZC-target", L, {}, 2, {{K::CX, {0, 1}}, {K::Z, {1}}},
          {{K::Z, {0}}, {K::Z, {1}}, {K::CX, {0, 1}}});
    b.add("ax:ZC-control", AxiomFamily::TransportTable, {}, 2, {{K::CX, {0, 1}}, {K::Z, {0}}},
          {{K::Z, {0}}, {K::CX, {0, 1}}});
}

void quadratic_axioms(Builder &b, const FieldCtx &f) {
    if (!f.has_quadratic()) {
        return;
    }
    const std::uint64_t d = f.modulus();
    const auto Q = AxiomFamily::Quad;
    const auto TT = AxiomFamily::TransportTable;
    const auto CT = AxiomFamily::CommTable;
    b.add("ax:S-order-d", Q, {}, 1, repeat({K::S, {0}}, d), {});
    b.add("ax:SZ", Q, {}, 1, {{K::S, {0}}, {K::Z, {0}}}, {{K::Z, {0}}, {K::S, {0}}});
    b.add("ax:SC-control", Q, {}, 2, {{K::CX, {0, 1}}, {K::S, {0}}}, {{K::S, {0}}, {K::CX, {0, 1}}});
    b.add("ax:SX", Q, {}, 1, {{K::X, {0}}, {K::S, {0}}}, {{K::S, {0}}, {K::Z, {0}}, {K::X, {0}}});
    for (std::uint64_t x = 1; x < d; ++x) {
        b.add("ax:SM", Q, {{"x", x}}, 1, {{K::M, {0}, s64(x)}, {K::S, {0}}},
              {{K::S, {0}, s64(f.mul(x, x))}, {K::Z, {0}, s64(f.binom2(x))}, {K::M, {0}, s64(x)}});
        b.add("ax:CZ-M", Q, {{"x", x}}, 2, {{K::M, {0}, s64(x)}, {K::CZ, {0, 1}}},
              {{K::CZ, {0, 1}, s64(x)}, {K::M, {0}, s64(x)}});
    }
    b.add("ax:CC-control", Q, {}, 3, {{K::CX, {0, 1}}, {K::CZ, {0, 2}}},
          {{K::CZ, {0, 2}}, {K::CX, {0, 1}}});

    b.add("ax:SC-target", TT, {}, 2, {{K::CX, {0, 1}}, {K::S, {1}}},
          {{K::S, {0}}, {K::S, {1}}, {K::CZ, {0, 1}}, {K::CX, {0, 1}}});
    b.add("ax:CZ-X", TT, {}, 2, {{K::X, {0}}, {K::CZ, {0, 1}}},
          {{K::CZ, {0, 1}}, {K::Z, {1}}, {K::X, {0}}});
    b.add("ax:CC-target", TT, {}, 3, {{K::CX, {0, 1}}, {K::CZ, {1, 2}}},
          {{K::CZ, {0, 2}}, {K::CZ, {1, 2}}, {K::CX, {0, 1}}});
    b.add("ax:CZ-CX", TT, {}, 2, {{K::CX, {0, 1}}, {K::CZ, {0, 1}}},
          {{K::CZ, {0, 1}}, {K::S, {0}, 2}, {K::Z, {0}}, {K::CX, {0, 1}}});

    b.add("ax:SCZ", CT, {}, 2, {{K::S, {0}}, {K::CZ, {0, 1}}}, {{K::CZ, {0, 1}}, {K::S, {0}}});
    b.add("ax:ZCZ", CT, {}, 2, {{K::Z, {0}}, {K::CZ, {0, 1}}}, {{K::CZ, {0, 1}}, {K::Z, {0}}});
    b.add("ax:CZCZ", CT, {}, 3, {{K::CZ, {0, 1}}, {K::CZ, {1, 2}}}, {{K::CZ, {1, 2}}, {K::CZ, {0, 1}}});
    b.add("ax:CZ-SWAP", CT, {}, 2, {{K::CZ, {0, 1}}, {K::SWAP, {0, 1}}},
          {{K::SWAP, {0, 1}}, {K::CZ, {0, 1}}});

    b.add("ax:PhaseGadgetS", Q, {}, 2, {{K::CX, {0, 1}}, {K::S, {1}}, {K::CX, {0, 1}, -1}},
          {{K::S, {0}}, {K::S, {1}}, {K::CZ, {0, 1}}});
    b.add("ax:GadgetCZmin", Q, {}, 2, {{K::CX, {0, 1}}, {K::S, {1}, -1}, {K::CX, {0, 1}, -1}},
          {{K::S, {0}, -1}, {K::S, {1}, -1}, {K::CZ, {0, 1}, -1}});
    for (std::uint64_t a = 0; a < d; ++a) {
        for (std::uint64_t c = 0; c < d; ++c) {
            b.add("ax:CZsum", Q, {{"a", a}, {"b", c}}, 2,
                  {{K::CZ, {0, 1}, s64(a)}, {K::CZ, {0, 1}, s64(c)}}, {{K::CZ, {0, 1}, s64(f.add(a, c))}});
        }
    }
    Builder scratch(f);
    for (std::uint64_t k = 1; k < d; ++k) {
        Circuit cz = expand_derived(scratch.build(2, {{K::CZ, {0, 1}, s64(k)}}));
        Gs word;
        for (const Gate &g : cz.gates()) {
            word.push_back({g.kind, {g.wires[0], g.wires[1]}, s64(g.arg)});
            word.back().w.resize(gate_arity(g.kind));
        }
        b.add("ax:CZexp", Q, {{"k", k}}, 2, {{K::CZ, {0, 1}, s64(k)}}, word);
    }
    b.add("ax:CZ-d", Q, {}, 2, repeat({K::CZ, {0, 1}}, d), {});
}

void cubic_axioms(Builder &b, const FieldCtx &f) {
    if (!f.has_cubic()) {
        return;
    }
    const std::uint64_t d = f.modulus();
    const auto C = AxiomFamily::Cubic;
    const auto TT = AxiomFamily::TransportTable;
    const auto CT = AxiomFamily::CommTable;
    b.add("ax:T-order-d", C, {}, 1, repeat({K::T, {0}}, d), {});
    b.add("ax:TS", C, {}, 1, {{K::T, {0}}, {K::S, {0}}}, {{K::S, {0}}, {K::T, {0}}});
    b.add("ax:TZ", C, {}, 1, {{K::T, {0}}, {K::Z, {0}}}, {{K::Z, {0}}, {K::T, {0}}});
    b.add("ax:CS-CNOT-bot", C, {}, 2, {{K::CX, {1, 0}}, {K::CS, {0, 1}}},
          {{K::CS, {0, 1}}, {K::T, {1}, 3}, {K::S, {1}, 2}, {K::CX, {1, 0}}});
    b.add("ax:CS-CNOT-bot2", C, {}, 3, {{K::CX, {1, 2}}, {K::CS, {0, 2}}},
          {{K::CS, {0, 2}}, {K::CS, {0, 1}}, {K::CCZ, {0, 1, 2}}, {K::CX, {1, 2}}});
    b.add("ax:TX", C, {}, 1, {{K::X, {0}}, {K::T, {0}}}, {{K::T, {0}}, {K::S, {0}}, {K::X, {0}}});
    for (std::uint64_t x = 1; x < d; ++x) {
        std::uint64_t x3 = f.mul(f.mul(x, x), x);
        b.add("ax:TM", C, {{"x", x}}, 1, {{K::M, {0}, s64(x)}, {K::T, {0}}},
              {{K::T, {0}, s64(x3)},
               {K::S, {0}, s64(f.mul(f.mul(2, x), f.binom2(x)))},
               {K::Z, {0}, s64(f.binom3(x))},
               {K::M, {0}, s64(x)}});
        b.add("ax:CS-M-top", C, {{"x", x}}, 2, {{K::M, {0}, s64(x)}, {K::CS, {0, 1}}},
              {{K::CS, {0, 1}, s64(x)}, {K::M, {0}, s64(x)}});
        b.add("ax:CS-M-bot", C, {{"x", x}}, 2, {{K::M, {1}, s64(x)}, {K::CS, {0, 1}}},
              {{K::CS, {0, 1}, s64(f.mul(x, x))}, {K::CZ, {0, 1}, s64(f.binom2(x))}, {K::M, {1}, s64(x)}});
        b.add("ax:CCZ-M", C, {{"x", x}}, 3, {{K::M, {0}, s64(x)}, {K::CCZ, {0, 1, 2}}},
              {{K::CCZ, {0, 1, 2}, s64(x)}, {K::M, {0}, s64(x)}});
    }
    b.add("ax:TC-control", C, {}, 2, {{K::CX, {0, 1}}, {K::T, {0}}}, {{K::T, {0}}, {K::CX, {0, 1}}});
    b.add("ax:CCZ-CNOTtop", C, {}, 3, {{K::CX, {0, 1}}, {K::CCZ, {0, 1, 2}}},
          {{K::CCZ, {0, 1, 2}}, {K::SC, {0, 2}, 2}, {K::CZ, {0, 2}}, {K::CX, {0, 1}}});

    // Transport statements.
    b.add("ax:TC-target", TT, {}, 2, {{K::CX, {0, 1}}, {K::T, {1}}},
          {{K::T, {0}}, {K::T, {1}}, {K::CS, {0, 1}}, {K::SC, {0, 1}}, {K::CX, {0, 1}}});
    b.add("ax:CS-CNOT-top", TT, {}, 2, {{K::CX, {0, 1}}, {K::CS, {0, 1}}},
          {{K::CS, {0, 1}},
           {K::T, {0}, 3},
           {K::S, {0}, 2},
           {K::SC, {0, 1}, 2},
           {K::CZ, {0, 1}},
           {K::CX, {0, 1}}});
    b.add("ax:CS-CNOT-top2", TT, {}, 3, {{K::CX, {0, 2}}, {K::CS, {0, 1}}}, {{K::CS, {0, 1}}, {K::CX, {0, 2}}});
    b.add("ax:CS-CNOT-rev", TT, {}, 3, {{K::CX, {1, 2}}, {K::CS, {0, 1}}}, {{K::CS, {0, 1}}, {K::CX, {1, 2}}});
    b.add("ax:CS-CNOT", TT, {}, 3, {{K::CX, {2, 0}}, {K::CS, {0, 1}}},
          {{K::CS, {0, 1}}, {K::CS, {2, 1}}, {K::CX, {2, 0}}});
    b.add("ax:CCZ-CNOTbot", TT, {}, 4, {{K::CX, {0, 3}}, {K::CCZ, {0, 1, 2}}},
          {{K::CCZ, {0, 1, 2}}, {K::CX, {0, 3}}});
    b.add("ax:CCZ-CNOT", TT, {}, 4, {{K::CX, {3, 2}}, {K::CCZ, {0, 1, 2}}},
          {{K::CCZ, {0, 1, 2}}, {K::CCZ, {0, 1, 3}}, {K::CX, {3, 2}}});
    b.add("ax:CS-X-top", TT, {}, 2, {{K::X, {0}}, {K::CS, {0, 1}}}, {{K::CS, {0, 1}}, {K::S, {1}}, {K::X, {0}}});
    b.add("ax:CS-X-bot", TT, {}, 2, {{K::X, {1}}, {K::CS, {0, 1}}},
          {{K::CS, {0, 1}}, {K::CZ, {0, 1}}, {K::X, {1}}});
    b.add("ax:CCZ-X", TT, {}, 3, {{K::X, {0}}, {K::CCZ, {0, 1, 2}}},
          {{K::CCZ, {0, 1, 2}}, {K::CZ, {1, 2}}, {K::X, {0}}});

    // Commutation statements: both orders of a pair of diagonal gates.
    auto comm = [&](const std::string &id, std::size_t n, const G &g1, const G &g2) {
        b.add(id, CT, {}, n, {g1, g2}, {g2, g1});
    };
    comm("ax:TCZ", 2, {K::T, {0}}, {K::CZ, {0, 1}});
    comm("ax:TCStop", 2, {K::T, {0}}, {K::CS, {0, 1}});
    comm("ax:TCSbot", 2, {K::T, {1}}, {K::CS, {0, 1}});
    comm("ax:SCStop", 2, {K::S, {0}}, {K::CS, {0, 1}});
    comm("ax:SCSbot", 2, {K::S, {1}}, {K::CS, {0, 1}});
    comm("ax:ZCStop", 2, {K::Z, {0}}, {K::CS, {0, 1}});
    comm("ax:ZCSbot", 2, {K::Z, {1}}, {K::CS, {0, 1}});
    comm("ax:CSCZbot", 3, {K::CS, {0, 1}}, {K::CZ, {1, 2}});
    comm("ax:CSCZtop", 3, {K::CS, {0, 1}}, {K::CZ, {0, 2}});
    comm("ax:CSCZ", 2, {K::CS, {0, 1}}, {K::CZ, {0, 1}});
    comm("ax:CCZ-SWAP", 3, {K::CCZ, {0, 1, 2}}, {K::SWAP, {0, 1}});
    comm("ax:CCZ-SWAP2", 3, {K::CCZ, {0, 1, 2}}, {K::SWAP, {1, 2}});
    comm("ax:CSCS", 3, {K::CS, {0, 1}}, {K::CS, {0, 2}});
    comm("ax:CSCS2", 3, {K::CS, {0, 1}}, {K::CS, {1, 2}});
    comm("ax:CSCS3", 3, {K::CS, {0, 2}}, {K::CS, {1, 2}});
    comm("ax:CSSC", 2, {K::CS, {0, 1}}, {K::SC, {0, 1}});
    comm("ax:TCCZ", 3, {K::T, {0}}, {K::CCZ, {0, 1, 2}});
    comm("ax:SCCZ", 3, {K::S, {0}}, {K::CCZ, {0, 1, 2}});
    comm("ax:ZCCZ", 3, {K::Z, {0}}, {K::CCZ, {0, 1, 2}});
    comm("ax:CCZCZtop", 3, {K::CCZ, {0, 1, 2}}, {K::CZ, {0, 1}});
    comm("ax:CCZCZ", 4, {K::CCZ, {0, 1, 2}}, {K::CZ, {2, 3}});
    comm("ax:CCZ-CS-1", 3, {K::CCZ, {0, 1, 2}}, {K::CS, {0, 1}});
    comm("ax:CCZ-CS-2", 3, {K::CCZ, {0, 1, 2}}, {K::CS, {2, 0}});
    comm("ax:CCZ-CS-3", 4, {K::CCZ, {0, 1, 2}}, {K::CS, {0, 3}});
    comm("ax:CCZCCZ", 4, {K::CCZ, {0, 1, 2}}, {K::CCZ, {1, 2, 3}});
    comm("ax:CCZCCZ2", 4, {K::CCZ, {0, 1, 2}}, {K::CCZ, {0, 1, 3}});

    b.add("ax:PhaseGadgetT", C, {}, 2, {{K::CX, {0, 1}}, {K::T, {1}}, {K::CX, {0, 1}, -1}},
          {{K::T, {0}}, {K::T, {1}}, {K::CS, {0, 1}}, {K::SC, {0, 1}}});
    Gs gadget01{{K::CX, {0, 1}}, {K::T, {1}}, {K::CX, {0, 1}, -1}};
    Gs gadget02{{K::CX, {0, 2}}, {K::T, {2}}, {K::CX, {0, 2}, -1}};
    b.add("ax:PhaseGadgetComm", C, {}, 3, cat(gadget01, gadget02), cat(gadget02, gadget01));
    b.add("ax:CS-order-d", C, {}, 2, repeat({K::CS, {0, 1}}, d), {});
    b.add("ax:CCZ-d", C, {}, 3, repeat({K::CCZ, {0, 1, 2}}, d), {});
}

}  // namespace

std::vector<AxiomInstance> catalogue(const FieldCtx &ctx) {
    Builder b(ctx);
    affine_axioms(b, ctx);
    linear_axioms(b, ctx);
    quadratic_axioms(b, ctx);
    cubic_axioms(b, ctx);
    return b.take();
}

AxiomVerdict verify_axiom(const AxiomInstance &a, std::uint64_t cap) {
    AxiomVerdict v;
    PhaseAffineSem l = interpret(a.lhs);
    PhaseAffineSem r = interpret(a.rhs);
    v.ok = l == r;
    if (!v.ok) {
        v.witness = find_witness(l, r, cap);
        v.detail = "semantics differ";
    }
    std::uint64_t states = 0;
    try {
        states = state_space_size(a.lhs.ctx(), a.lhs.n(), cap);
    } catch (const Error &) {
        return v;
    }
    (void)states;
    v.oracle_checked = true;
    auto diff = first_difference(oracle_table(a.lhs, cap), oracle_table(a.rhs, cap));
    if (diff) {
        if (v.ok) {
            v.detail = "oracle tables differ although semantics agree";
        }
        v.ok = false;
        if (!v.witness) {
            v.witness = diff;
        }
    } else if (!v.ok) {
        v.detail = "semantics differ although oracle tables agree";
    }
    return v;
}

namespace {

struct Rule {
    std::vector<Gate> pattern;
    std::vector<Gate> replacement;
    std::size_t n;
};

struct RuleSet {
    // Keyed by (kind, arg) of the first pattern gate.
    std::map<std::pair<GateKind, std::uint64_t>, std::vector<Rule>> by_head;
};

std::shared_ptr<const RuleSet> rules_for(const FieldCtx &ctx) {
    static std::mutex mu;
    static std::map<std::uint64_t, std::shared_ptr<const RuleSet>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(ctx.modulus());
    if (it != cache.end()) {
        return it->second;
    }
    auto rs = std::make_shared<RuleSet>();
    for (const AxiomInstance &a : catalogue(ctx)) {
        for (int dir = 0; dir < 2; ++dir) {
            const Circuit &from = dir == 0 ? a.lhs : a.rhs;
            const Circuit &to = dir == 0 ? a.rhs : a.lhs;
            if (from.empty()) {
                continue;
            }
            const Gate &h = from.gates().front();
            rs->by_head[{h.kind, h.arg}].push_back({from.gates(), to.gates(), a.lhs.n()});
        }
    }
    cache.emplace(ctx.modulus(), rs);
    return rs;
}

struct Match {
    std::size_t pos;
    const Rule *rule;
    std::vector<std::uint32_t> wire_map;
};

bool try_match(const std::vector<Gate> &gates, std::size_t pos, const Rule &r, std::size_t n,
               std::vector<std::uint32_t> &map) {
    constexpr std::uint32_t kUnset = 0xffffffffu;
    map.assign(r.n, kUnset);
    std::vector<bool> used(n, false);
    if (pos + r.pattern.size() > gates.size()) {
        return false;
    }
    for (std::size_t k = 0; k < r.pattern.size(); ++k) {
        const Gate &p = r.pattern[k];
        const Gate &g = gates[pos + k];
        if (p.kind != g.kind || p.arg != g.arg) {
            return false;
        }
        for (std::size_t w = 0; w < gate_arity(p.kind); ++w) {
            std::uint32_t pw = p.wires[w];
            std::uint32_t cw = g.wires[w];
            if (map[pw] == kUnset) {
                if (used[cw]) {
                    return false;
                }
                map[pw] = cw;
                used[cw] = true;
            } else if (map[pw] != cw) {
                return false;
            }
        }
    }
    // Wires that only the replacement touches go to the lowest free wires.
    std::uint32_t next = 0;
    for (std::size_t pw = 0; pw < r.n; ++pw) {
        if (map[pw] != kUnset) {
            continue;
        }
        while (next < n && used[next]) {
            ++next;
        }
        if (next >= n) {
            return false;
        }
        map[pw] = next;
        used[next] = true;
    }
    return true;
}

}  // namespace

Circuit random_sound_rewrite(const Circuit &c, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto rules = rules_for(c.ctx());
    const auto &gates = c.gates();
    std::vector<Match> matches;
    std::vector<std::uint32_t> map;
    for (std::size_t pos = 0; pos < gates.size(); ++pos) {
        auto it = rules->by_head.find({gates[pos].kind, gates[pos].arg});
        if (it == rules->by_head.end()) {
            continue;
        }
        for (const Rule &r : it->second) {
            if (r.n <= c.n() && try_match(gates, pos, r, c.n(), map)) {
                matches.push_back({pos, &r, map});
            }
        }
    }
    Circuit out(c.ctx(), c.n());
    if (matches.empty()) {
        std::vector<GateKind> kinds = legal_gate_kinds(c.ctx(), c.n());
        Gate g = random_gate(c.ctx(), c.n(), kinds, rng);
        std::size_t at = std::uniform_int_distribution<std::size_t>(0, gates.size())(rng);
        for (std::size_t i = 0; i <= gates.size(); ++i) {
            if (i == at) {
                out.append(g);
                out.append(inverse_gate(g, c.ctx()));
            }
            if (i < gates.size()) {
                out.append(gates[i]);
            }
        }
        return out;
    }
    const Match &m = matches[std::uniform_int_distribution<std::size_t>(0, matches.size() - 1)(rng)];
    for (std::size_t i = 0; i < m.pos; ++i) {
        out.append(gates[i]);
    }
    for (Gate g : m.rule->replacement) {
        for (std::size_t w = 0; w < gate_arity(g.kind); ++w) {
            g.wires[w] = m.wire_map[g.wires[w]];
        }
        out.append(g);
    }
    for (std::size_t i = m.pos + m.rule->pattern.size(); i < gates.size(); ++i) {
        out.append(gates[i]);
    }
    return out;
}

}  // namespace qupit
