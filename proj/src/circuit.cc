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

#include "qupit/circuit.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "qupit/error.h"

namespace qupit {

std::string_view gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::X:
            return "X";
        case GateKind::M:
            return "M";
        case GateKind::CX:
            return "CX";
        case GateKind::SWAP:
            return "SWAP";
        case GateKind::Z:
            return "Z";
        case GateKind::S:
            return "S";
        case GateKind::T:
            return "T";
        case GateKind::W:
            return "W";
        case GateKind::CZ:
            return "CZ";
        case GateKind::CS:
            return "CS";
        case GateKind::SC:
            return "SC";
        case GateKind::CCZ:
            return "CCZ";
    }
    return "?";
}

std::optional<GateKind> gate_kind_from_name(std::string_view name) {
    for (GateKind k : kAllGateKinds) {
        if (gate_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

std::size_t gate_arity(GateKind kind) {
    switch (kind) {
        case GateKind::W:
            return 0;
        case GateKind::X:
        case GateKind::M:
        case GateKind::Z:
        case GateKind::S:
        case GateKind::T:
            return 1;
        case GateKind::CCZ:
            return 3;
        default:
            return 2;
    }
}

bool is_affine(GateKind kind) {
    return kind == GateKind::X || kind == GateKind::M || kind == GateKind::CX ||
           kind == GateKind::SWAP;
}

int gate_degree(GateKind kind) {
    if (is_affine(kind)) {
        return 0;
    }
    return diagonal_degree(to_diagonal_kind(kind));
}

bool gate_allowed(GateKind kind, const FieldCtx &ctx) {
    return gate_degree(kind) <= max_degree_cap(ctx);
}

bool operator==(const Gate &a, const Gate &b) noexcept {
    if (a.kind != b.kind || a.arg != b.arg) {
        return false;
    }
    for (std::size_t i = 0; i < gate_arity(a.kind); ++i) {
        if (a.wires[i] != b.wires[i]) {
            return false;
        }
    }
    return true;
}

AffineGate to_affine_gate(const Gate &g) {
    switch (g.kind) {
        case GateKind::X:
            return {AffineKind::X, g.wires[0], 0, g.arg};
        case GateKind::M:
            return {AffineKind::M, g.wires[0], 0, g.arg};
        case GateKind::CX:
            return {AffineKind::CX, g.wires[0], g.wires[1], g.arg};
        case GateKind::SWAP:
            return {AffineKind::SWAP, g.wires[0], g.wires[1], 1};
        default:
            throw Error(ErrorKind::BadParameter,
                        std::string(gate_name(g.kind)) + " is not an affine gate");
    }
}

DiagonalKind to_diagonal_kind(GateKind kind) {
    switch (kind) {
        case GateKind::Z:
            return DiagonalKind::Z;
        case GateKind::S:
            return DiagonalKind::S;
        case GateKind::T:
            return DiagonalKind::T;
        case GateKind::W:
            return DiagonalKind::W;
        case GateKind::CZ:
            return DiagonalKind::CZ;
        case GateKind::CS:
            return DiagonalKind::CS;
        case GateKind::SC:
            return DiagonalKind::SC;
        case GateKind::CCZ:
            return DiagonalKind::CCZ;
        default:
            throw Error(ErrorKind::BadParameter,
                        std::string(gate_name(kind)) + " is not a diagonal gate");
    }
}

Circuit::Circuit(const FieldCtx &ctx, std::size_t n) : ctx_(ctx), n_(n) {
}

Circuit &Circuit::append(GateKind kind, std::initializer_list<std::uint32_t> wires, std::int64_t arg) {
    return append(kind, std::vector<std::uint32_t>(wires), arg);
}

Circuit &Circuit::append(GateKind kind, const std::vector<std::uint32_t> &wires, std::int64_t arg) {
    if (wires.size() != gate_arity(kind)) {
        throw Error(ErrorKind::BadWires, std::string(gate_name(kind)) + " takes " +
                                             std::to_string(gate_arity(kind)) + " wires, got " +
                                             std::to_string(wires.size()));
    }
    Gate g;
    g.kind = kind;
    std::copy(wires.begin(), wires.end(), g.wires.begin());
    g.arg = ctx_.reduce(arg);
    return append(g);
}

Circuit &Circuit::append(const Gate &in) {
    Gate g = in;
    std::size_t arity = gate_arity(g.kind);
    for (std::size_t i = 0; i < 3; ++i) {
        if (i >= arity) {
            g.wires[i] = 0;
            continue;
        }
        if (g.wires[i] >= n_) {
            throw Error(ErrorKind::BadWires, std::string(gate_name(g.kind)) + ": wire " +
                                                 std::to_string(g.wires[i]) + " out of range for " +
                                                 std::to_string(n_) + " wires");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (g.wires[i] == g.wires[j]) {
                throw Error(ErrorKind::BadWires, std::string(gate_name(g.kind)) + ": repeated wire " +
                                                     std::to_string(g.wires[i]));
            }
        }
    }
    if (!gate_allowed(g.kind, ctx_)) {
        throw Error(ErrorKind::FragmentUnavailable, std::string(gate_name(g.kind)) +
                                                        " is unavailable at d=" +
                                                        std::to_string(ctx_.modulus()));
    }
    g.arg = ctx_.reduce_unsigned(g.arg);
    if (g.kind == GateKind::SWAP) {
        g.arg = 1;
    } else if (g.kind == GateKind::M) {
        if (g.arg == 0) {
            throw Error(ErrorKind::BadParameter, "M needs a nonzero scale");
        }
    } else if (g.arg == 0) {
        return *this;
    }
    gates_.push_back(g);
    return *this;
}

Circuit &Circuit::append(const Circuit &c) {
    if (!(c.ctx_ == ctx_) || c.n_ != n_) {
        throw Error(ErrorKind::DimensionMismatch, "cannot append a circuit of different shape");
    }
    gates_.insert(gates_.end(), c.gates_.begin(), c.gates_.end());
    return *this;
}

Circuit compose(const Circuit &c2, const Circuit &c1) {
    Circuit out = c1;
    out.append(c2);
    return out;
}

Circuit tensor(const Circuit &c1, const Circuit &c2) {
    if (!(c1.ctx() == c2.ctx())) {
        throw Error(ErrorKind::ModulusMismatch, "tensor across moduli");
    }
    Circuit out(c1.ctx(), c1.n() + c2.n());
    for (const Gate &g : c1.gates()) {
        out.append(g);
    }
    auto shift = static_cast<std::uint32_t>(c1.n());
    for (Gate g : c2.gates()) {
        for (std::size_t i = 0; i < gate_arity(g.kind); ++i) {
            g.wires[i] += shift;
        }
        out.append(g);
    }
    return out;
}

Gate inverse_gate(const Gate &g, const FieldCtx &ctx) {
    Gate inv = g;
    if (g.kind == GateKind::M) {
        inv.arg = ctx.inv(g.arg);
    } else if (g.kind != GateKind::SWAP) {
        inv.arg = ctx.neg(g.arg);
    }
    return inv;
}

Circuit adjoint(const Circuit &c) {
    Circuit out(c.ctx(), c.n());
    for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
        out.append(inverse_gate(*it, c.ctx()));
    }
    return out;
}

namespace {

using W = std::uint32_t;

// k * C(x_i + x_j, 3) as [CX(i,j), T(j)^k, CX(i,j)^-1].
void t_pair(Circuit &c, W i, W j, std::int64_t k) {
    c.append(GateKind::CX, {i, j}, 1);
    c.append(GateKind::T, {j}, k);
    c.append(GateKind::CX, {i, j}, -1);
}

// k * (C(x_i,2) x_j + x_i C(x_j,2)).
void p_word(Circuit &c, W i, W j, std::int64_t k) {
    t_pair(c, i, j, k);
    c.append(GateKind::T, {i}, -k);
    c.append(GateKind::T, {j}, -k);
}

// k * x_i x_j.
void cz_word(Circuit &c, W i, W j, std::int64_t k) {
    c.append(GateKind::CX, {i, j}, 1);
    c.append(GateKind::S, {j}, k);
    c.append(GateKind::CX, {i, j}, -1);
    c.append(GateKind::S, {i}, -k);
    c.append(GateKind::S, {j}, -k);
}

// k * x_i C(x_j,2) = k t (P(x_i, 2 x_j) - 2 P(x_i, x_j) - x_i x_j), t = 1/2.
void cs_word(Circuit &c, W i, W j, std::int64_t k) {
    const FieldCtx &f = c.ctx();
    auto t = static_cast<std::int64_t>(f.inv(2));
    auto kt = static_cast<std::int64_t>(f.mul(f.reduce(k), static_cast<std::uint64_t>(t)));
    c.append(GateKind::M, {j}, 2);
    p_word(c, i, j, kt);
    c.append(GateKind::M, {j}, t);
    p_word(c, i, j, -k);
    cz_word(c, i, j, -kt);
}

// k * x_i x_j x_l by inclusion-exclusion over C(sum,3).
void ccz_word(Circuit &c, W i, W j, W l, std::int64_t k) {
    c.append(GateKind::CX, {i, l}, 1);
    c.append(GateKind::CX, {j, l}, 1);
    c.append(GateKind::T, {l}, k);
    c.append(GateKind::CX, {j, l}, -1);
    c.append(GateKind::CX, {i, l}, -1);
    t_pair(c, i, j, -k);
    t_pair(c, i, l, -k);
    t_pair(c, j, l, -k);
    c.append(GateKind::T, {i}, k);
    c.append(GateKind::T, {j}, k);
    c.append(GateKind::T, {l}, k);
}

}  // namespace

Circuit expand_derived(const Circuit &c) {
    Circuit out(c.ctx(), c.n());
    for (const Gate &g : c.gates()) {
        auto k = static_cast<std::int64_t>(g.arg);
        const auto &w = g.wires;
        switch (g.kind) {
            case GateKind::CZ:
                cz_word(out, w[0], w[1], k);
                break;
            case GateKind::CS:
                cs_word(out, w[0], w[1], k);
                break;
            case GateKind::SC:
                cs_word(out, w[1], w[0], k);
                break;
            case GateKind::CCZ:
                ccz_word(out, w[0], w[1], w[2], k);
                break;
            default:
                out.append(g);
                break;
        }
    }
    return out;
}

void append_affine(Circuit &c, const std::vector<AffineGate> &gates) {
    for (const AffineGate &a : gates) {
        Gate g;
        switch (a.kind) {
            case AffineKind::X:
                g.kind = GateKind::X;
                break;
            case AffineKind::M:
                g.kind = GateKind::M;
                break;
            case AffineKind::CX:
                g.kind = GateKind::CX;
                break;
            case AffineKind::SWAP:
                g.kind = GateKind::SWAP;
                break;
        }
        g.wires = {a.a, a.b, 0};
        g.arg = a.arg;
        c.append(g);
    }
}

namespace {

struct Token {
    std::string_view text;
    std::size_t column;
};

std::vector<Token> tokenize(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') {
            break;
        }
        if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' &&
               line[i] != '#') {
            ++i;
        }
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

template <class Int>
bool parse_int(std::string_view s, Int &out) {
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    auto res = std::from_chars(s.data(), s.data() + s.size(), out);
    return res.ec == std::errc() && res.ptr == s.data() + s.size();
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    std::optional<Circuit> circuit;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        std::vector<Token> toks = tokenize(line);
        if (toks.empty()) {
            continue;
        }
        if (!circuit) {
            if (toks[0].text != "qupit") {
                throw SyntaxError(line_no, toks[0].column, "expected header 'qupit d=<prime> n=<wires>'");
            }
            std::optional<std::uint64_t> d, n;
            for (std::size_t t = 1; t < toks.size(); ++t) {
                std::string_view s = toks[t].text;
                std::uint64_t v = 0;
                if (s.size() > 2 && s.substr(0, 2) == "d=" && !d && parse_int(s.substr(2), v)) {
                    d = v;
                } else if (s.size() > 2 && s.substr(0, 2) == "n=" && !n && parse_int(s.substr(2), v)) {
                    n = v;
                } else {
                    throw SyntaxError(line_no, toks[t].column, "unexpected '" + std::string(s) + "' in header");
                }
            }
            if (!d || !n) {
                throw SyntaxError(line_no, toks[0].column, "header needs both d= and n=");
            }
            circuit.emplace(FieldCtx(*d), static_cast<std::size_t>(*n));
            continue;
        }
        auto kind = gate_kind_from_name(toks[0].text);
        if (!kind) {
            throw SyntaxError(line_no, toks[0].column, "unknown gate '" + std::string(toks[0].text) + "'");
        }
        std::size_t arity = gate_arity(*kind);
        std::vector<std::uint32_t> wires;
        std::size_t t = 1;
        for (; t <= arity; ++t) {
            std::uint32_t w = 0;
            if (t >= toks.size()) {
                throw SyntaxError(line_no, line.size() + 1,
                                  std::string(gate_name(*kind)) + " expects " + std::to_string(arity) + " wires");
            }
            if (!parse_int(toks[t].text, w)) {
                throw SyntaxError(line_no, toks[t].column, "bad wire index '" + std::string(toks[t].text) + "'");
            }
            wires.push_back(w);
        }
        std::int64_t arg = 1;
        bool has_arg = false;
        if (t < toks.size()) {
            std::string_view s = toks[t].text;
            if (*kind == GateKind::M && s.size() > 2 && s.substr(0, 2) == "k=" && parse_int(s.substr(2), arg)) {
                has_arg = true;
            } else if (*kind != GateKind::M && *kind != GateKind::SWAP && s.size() > 1 && s[0] == '^' &&
                       parse_int(s.substr(1), arg)) {
                has_arg = true;
            } else {
                throw SyntaxError(line_no, toks[t].column, "unexpected '" + std::string(s) + "'");
            }
            ++t;
        }
        if (t < toks.size()) {
            throw SyntaxError(line_no, toks[t].column, "trailing '" + std::string(toks[t].text) + "'");
        }
        if (*kind == GateKind::M && !has_arg) {
            throw SyntaxError(line_no, line.size() + 1, "M needs a scale 'k=<s>'");
        }
        try {
            circuit->append(*kind, wires, arg);
        } catch (const Error &e) {
            throw Error(e.kind(), "line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (!circuit) {
        throw SyntaxError(line_no == 0 ? 1 : line_no, 1, "missing header 'qupit d=<prime> n=<wires>'");
    }
    return *circuit;
}

std::string format_gate(const Gate &g) {
    std::ostringstream os;
    os << gate_name(g.kind);
    for (std::size_t i = 0; i < gate_arity(g.kind); ++i) {
        os << ' ' << g.wires[i];
    }
    if (g.kind == GateKind::M) {
        os << " k=" << g.arg;
    } else if (g.kind == GateKind::W || (g.kind != GateKind::SWAP && g.arg != 1)) {
        // A bare "W" line reads oddly, so W always shows its power.
        os << " ^" << g.arg;
    }
    return os.str();
}

std::string print_circuit(const Circuit &c) {
    std::ostringstream os;
    os << "qupit d=" << c.ctx().modulus() << " n=" << c.n() << '\n';
    for (const Gate &g : c.gates()) {
        os << format_gate(g) << '\n';
    }
    return os.str();
}

}  // namespace qupit
