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

#include "qupit/json_io.h"

#include "qupit/circuit.h"

namespace qupit {

using nlohmann::json;

json to_json(const PhasePoly &q) {
    json out = json::array();
    for (const auto &[m, c] : q.terms()) {
        json wires = json::array();
        for (std::size_t i = 0; i < m.arity(); ++i) {
            wires.push_back(m.w[i]);
        }
        out.push_back({{"kind", m.kind_name()}, {"wires", wires}, {"coeff", c}});
    }
    return out;
}

json to_json(const AffineMap &g) {
    json rows = json::array();
    json b = json::array();
    for (std::size_t r = 0; r < g.n(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < g.n(); ++c) {
            row.push_back(g.a(r, c));
        }
        rows.push_back(std::move(row));
        b.push_back(g.b(r));
    }
    return {{"A", rows}, {"b", b}};
}

json to_json(const PhaseAffineSem &s) {
    json out = to_json(s.g);
    out["d"] = s.ctx().modulus();
    out["n"] = s.n();
    out["fragment"] = std::string(fragment_name(s.fragment));
    out["phase"] = to_json(s.q);
    return out;
}

json to_json(const PhaseAffineNF &nf) {
    const DiagonalNF &d = nf.diag;
    json gates = json::array();
    for (const AffineGate &a : nf.aff) {
        Circuit c(d.ctx, d.n);
        append_affine(c, {a});
        for (const Gate &g : c.gates()) {
            gates.push_back(format_gate(g));
        }
    }
    return {{"w", d.w},   {"z", d.z},   {"s", d.s},     {"t", d.t},
            {"cz", d.cz}, {"cs", d.cs}, {"sc", d.sc},   {"ccz", d.ccz},
            {"affine_gates", gates}};
}

}  // namespace qupit
