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

#include "cli.h"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qupit/axioms.h"
#include "qupit/error.h"
#include "qupit/fuzz.h"
#include "qupit/group_presentation.h"
#include "qupit/json_io.h"
#include "qupit/normal_form.h"
#include "qupit/semantics.h"

namespace qupit::cli {

namespace {

using nlohmann::json;

struct Global {
    std::string format = "text";
    std::uint64_t seed = 0;
    std::uint64_t cap = kDefaultStateCap;
    unsigned jobs = 1;

    bool json() const {
        return format == "json";
    }
};

int exit_code_for(ErrorKind k) {
    switch (k) {
        case ErrorKind::FragmentUnavailable:
            return kFragmentError;
        case ErrorKind::DimensionMismatch:
        case ErrorKind::ModulusMismatch:
            return kShapeMismatch;
        case ErrorKind::StateSpaceTooLarge:
            return kOverCap;
        default:
            return kInputError;
    }
}

Circuit read_circuit(const std::string &path, std::istream &in) {
    std::string text;
    if (path == "-") {
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    } else {
        std::ifstream f(path);
        if (!f) {
            throw Error(ErrorKind::BadParameter, "cannot open " + path);
        }
        text.assign(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    try {
        return parse_circuit(text);
    } catch (const Error &e) {
        // Keep the kind; name the file for multi-input commands.
        if (e.kind() == ErrorKind::SyntaxError) {
            throw;
        }
        throw Error(e.kind(), (path == "-" ? std::string("<stdin>") : path) + ": " + e.what());
    }
}

std::optional<Fragment> parse_fragment_opt(const std::string &s) {
    if (s.empty()) {
        return std::nullopt;
    }
    auto f = fragment_from_name(s);
    if (!f) {
        throw Error(ErrorKind::BadParameter, "unknown fragment '" + s + "'");
    }
    return f;
}

std::string point_text(const std::vector<std::uint64_t> &x) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < x.size(); ++i) {
        os << (i ? "," : "") << x[i];
    }
    os << ')';
    return os.str();
}

/// Runs fn(i) for i < count on `jobs` threads. fn writes only to slot i.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)> &fn) {
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) {
            fn(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                fn(i);
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
}

// semantics ---------------------------------------------------------------

int cmd_semantics(const Global &g, const std::string &path, const std::string &frag, std::istream &in,
                  std::ostream &out) {
    Circuit c = read_circuit(path, in);
    PhaseAffineSem s = interpret(c, parse_fragment_opt(frag));
    if (g.json()) {
        out << to_json(s).dump() << '\n';
        return kOk;
    }
    out << "d=" << s.ctx().modulus() << " n=" << s.n() << " fragment=" << fragment_name(s.fragment)
        << '\n';
    out << "A:\n";
    for (std::size_t r = 0; r < s.n(); ++r) {
        out << ' ';
        for (std::size_t col = 0; col < s.n(); ++col) {
            out << ' ' << s.g.a(r, col);
        }
        out << '\n';
    }
    out << "b:";
    for (std::size_t r = 0; r < s.n(); ++r) {
        out << ' ' << s.g.b(r);
    }
    out << "\nphase:";
    if (s.q.is_zero()) {
        out << " 0";
    }
    out << '\n';
    for (const auto &[m, coeff] : s.q.terms()) {
        out << "  " << coeff << ' ' << m.to_string() << '\n';
    }
    return kOk;
}

// normalize ---------------------------------------------------------------

void print_list(std::ostream &out, const char *name, const std::vector<std::uint64_t> &v) {
    out << name << ':';
    for (std::uint64_t x : v) {
        out << ' ' << x;
    }
    out << '\n';
}

int cmd_normalize(const Global &g, const std::string &path, const std::string &emit,
                  const std::string &frag, std::istream &in, std::ostream &out) {
    Circuit c = read_circuit(path, in);
    PhaseAffineNF nf = normalize(c, parse_fragment_opt(frag));
    if (emit == "nf") {
        if (g.json()) {
            out << to_json(nf).dump() << '\n';
            return kOk;
        }
        const DiagonalNF &d = nf.diag;
        out << "w: " << d.w << '\n';
        print_list(out, "z", d.z);
        print_list(out, "s", d.s);
        print_list(out, "t", d.t);
        print_list(out, "cz", d.cz);
        print_list(out, "cs", d.cs);
        print_list(out, "sc", d.sc);
        print_list(out, "ccz", d.ccz);
        Circuit aff(c.ctx(), c.n());
        append_affine(aff, nf.aff);
        out << "affine_gates:\n";
        for (const Gate &gate : aff.gates()) {
            out << "  " << format_gate(gate) << '\n';
        }
        return kOk;
    }
    Circuit r = render(nf);
    if (g.json()) {
        json gates = json::array();
        for (const Gate &gate : r.gates()) {
            gates.push_back(format_gate(gate));
        }
        out << json{{"d", r.ctx().modulus()}, {"n", r.n()}, {"gates", gates}}.dump() << '\n';
        return kOk;
    }
    out << print_circuit(r);
    return kOk;
}

// equiv -------------------------------------------------------------------

int cmd_equiv(const Global &g, const std::string &p1, const std::string &p2, std::istream &in,
              std::ostream &out, std::ostream &err) {
    Circuit c1 = read_circuit(p1, in);
    Circuit c2 = read_circuit(p2, in);
    if (c1.ctx().modulus() != c2.ctx().modulus() || c1.n() != c2.n()) {
        err << "shape mismatch: d=" << c1.ctx().modulus() << " n=" << c1.n() << " vs d="
            << c2.ctx().modulus() << " n=" << c2.n() << '\n';
        return kShapeMismatch;
    }
    PhaseAffineSem s1 = interpret(c1);
    PhaseAffineSem s2 = interpret(c2);
    const bool same = s1 == s2;

    std::optional<bool> oracle;
    try {
        state_space_size(c1.ctx(), c1.n(), g.cap);
        oracle = tables_equal(oracle_table(c1, g.cap), oracle_table(c2, g.cap));
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::StateSpaceTooLarge) {
            throw;
        }
    }
    if (oracle && *oracle != same) {
        err << "internal error: semantic verdict disagrees with the basis-table oracle\n";
        return kFailed;
    }

    std::optional<std::vector<std::uint64_t>> w;
    if (!same) {
        w = find_witness(s1, s2, g.cap);
    }
    if (g.json()) {
        json j{{"equivalent", same}, {"oracle_checked", oracle.has_value()}, {"witness", nullptr}};
        if (w) {
            j["witness"] = {{"x", *w},
                            {"image", {s1.g.apply(*w), s2.g.apply(*w)}},
                            {"phase", {s1.q.eval(*w), s2.q.eval(*w)}}};
        }
        out << j.dump() << '\n';
    } else if (same) {
        out << "equivalent\n";
    } else {
        out << "not equivalent\n";
        if (w) {
            out << "witness x=" << point_text(*w) << " image " << point_text(s1.g.apply(*w)) << " vs "
                << point_text(s2.g.apply(*w)) << " phase " << s1.q.eval(*w) << " vs " << s2.q.eval(*w)
                << '\n';
        } else {
            out << "no witness found below the search cap\n";
        }
    }
    if (!oracle) {
        err << "note: oracle cross-check skipped (state space above cap)\n";
    }
    return same ? kOk : kFailed;
}

// verify ------------------------------------------------------------------

struct VerifyLine {
    bool ok = true;
    std::string id;
    std::uint64_t d = 0;
    std::optional<std::size_t> n;
    std::vector<std::pair<std::string, std::uint64_t>> params;
    std::optional<std::vector<std::uint64_t>> witness;
};

int cmd_verify(const Global &g, const std::string &family, const std::vector<std::uint64_t> &ds,
               const std::vector<std::size_t> &ns, std::ostream &out) {
    std::set<AxiomFamily> fams;
    bool groups = false;
    if (family == "all") {
        fams = {AxiomFamily::Aff,   AxiomFamily::Lin,           AxiomFamily::Quad,
                AxiomFamily::Cubic, AxiomFamily::TransportTable, AxiomFamily::CommTable};
        groups = true;
    } else if (family == "aff") {
        fams = {AxiomFamily::Aff};
    } else if (family == "lin") {
        fams = {AxiomFamily::Lin};
    } else if (family == "quad") {
        fams = {AxiomFamily::Quad};
    } else if (family == "cubic") {
        fams = {AxiomFamily::Cubic};
    } else if (family == "tables") {
        fams = {AxiomFamily::TransportTable, AxiomFamily::CommTable};
    } else if (family == "groups") {
        groups = true;
    } else {
        throw Error(ErrorKind::BadParameter, "unknown family '" + family + "'");
    }

    std::vector<VerifyLine> lines;
    std::vector<std::string> notes;
    for (std::uint64_t d : ds) {
        FieldCtx ctx(d);
        std::vector<AxiomInstance> todo;
        for (AxiomInstance &a : catalogue(ctx)) {
            if (fams.count(a.family)) {
                todo.push_back(std::move(a));
            }
        }
        if (!fams.empty() && todo.empty()) {
            notes.push_back("note: family " + family + " has no instances at d=" + std::to_string(d));
        }
        std::vector<VerifyLine> part(todo.size());
        parallel_for(todo.size(), g.jobs, [&](std::size_t i) {
            AxiomVerdict v = verify_axiom(todo[i], g.cap);
            part[i] = {v.ok, todo[i].id, d, std::nullopt, todo[i].params, v.witness};
        });
        lines.insert(lines.end(), part.begin(), part.end());

        if (!groups) {
            continue;
        }
        for (std::size_t n : ns) {
            for (GroupFamily gf : {GroupFamily::SL, GroupFamily::GL, GroupFamily::AGL}) {
                std::vector<GroupRelation> rels = group_relations(n, ctx, gf);
                std::vector<VerifyLine> gpart(rels.size());
                parallel_for(rels.size(), g.jobs, [&](std::size_t i) {
                    const GroupRelation &r = rels[i];
                    bool ok = evaluate_word(r.lhs, n, ctx) == evaluate_word(r.rhs, n, ctx);
                    gpart[i] = {ok, "R_" + std::string(group_family_name(gf)) + ":" + r.id, d, n, r.params,
                                std::nullopt};
                });
                lines.insert(lines.end(), gpart.begin(), gpart.end());
            }
        }
    }

    std::size_t failed = 0;
    json records = json::array();
    for (const VerifyLine &l : lines) {
        failed += l.ok ? 0 : 1;
        if (g.json()) {
            json p = json::object();
            for (const auto &[k, v] : l.params) {
                p[k] = v;
            }
            json r{{"status", l.ok ? "PASS" : "FAIL"}, {"id", l.id}, {"d", l.d}, {"params", p}};
            r["n"] = l.n ? json(*l.n) : json(nullptr);
            r["witness"] = l.witness ? json(*l.witness) : json(nullptr);
            records.push_back(std::move(r));
            continue;
        }
        out << (l.ok ? "PASS " : "FAIL ") << l.id << " d=" << l.d;
        if (l.n) {
            out << " n=" << *l.n;
        }
        for (const auto &[k, v] : l.params) {
            out << ' ' << k << '=' << v;
        }
        if (l.witness) {
            out << " witness x=" << point_text(*l.witness);
        }
        out << '\n';
    }
    if (g.json()) {
        json notes_j = notes;
        out << json{{"results", records}, {"notes", notes_j}, {"failed", failed}, {"checked", lines.size()}}
                   .dump()
            << '\n';
    } else {
        for (const std::string &n : notes) {
            out << n << '\n';
        }
        out << "checked " << lines.size() << ", failed " << failed << '\n';
    }
    return failed == 0 ? kOk : kFailed;
}

// fuzz --------------------------------------------------------------------

int cmd_fuzz(const Global &g, FuzzOptions o, std::ostream &out, std::ostream &err) {
    o.seed = g.seed;
    o.cap = g.cap;
    o.jobs = g.jobs;
    FuzzReport rep = run_fuzz(o);
    if (g.json()) {
        json fails = json::array();
        for (const FuzzFailure &f : rep.failures) {
            fails.push_back({{"case", f.case_index}, {"seed", f.seed}, {"property", f.property},
                             {"circuit", f.circuit}});
        }
        out << json{{"checked", rep.checked},
                    {"oracle_checked", rep.oracle_checked},
                    {"oracle_skipped", rep.oracle_skipped},
                    {"failures", fails}}
                   .dump()
            << '\n';
    } else {
        out << "fuzz d=" << o.d << " n=" << o.n << " seed=" << o.seed << ": checked " << rep.checked
            << ", oracle " << rep.oracle_checked << ", failures " << rep.failures.size() << '\n';
        for (const FuzzFailure &f : rep.failures) {
            out << "FAIL case=" << f.case_index << " seed=" << f.seed << " property=" << f.property << '\n'
                << f.circuit;
        }
    }
    if (rep.oracle_skipped > 0) {
        err << "note: oracle checks skipped for " << rep.oracle_skipped << " cases (state space above cap)\n";
    }
    return rep.ok() ? kOk : kFailed;
}

// count -------------------------------------------------------------------

int cmd_count(const Global &g, const std::string &frag, std::uint64_t d, std::size_t n, bool enumerate,
              std::ostream &out, std::ostream &err) {
    FieldCtx ctx(d);
    Fragment f = *parse_fragment_opt(frag);
    BigInt total = count_diagonal_forms(n, f, ctx);
    json j{{"fragment", std::string(fragment_name(f))}, {"d", d}, {"n", n}, {"count", total.str()}};
    int code = kOk;
    if (enumerate) {
        if (total > g.cap) {
            err << "enumeration skipped: " << total << " forms exceed the cap " << g.cap << '\n';
            j["enumeration"] = nullptr;
            code = kOverCap;
        } else {
            InjectivityReport rep = enumerate_and_check_injectivity(n, f, ctx, g.cap);
            json coll = json::array();
            for (const auto &[a, b] : rep.collisions) {
                coll.push_back({a, b});
            }
            j["enumeration"] = {{"checked", rep.checked},
                                {"distinct", rep.checked - rep.collisions.size()},
                                {"collisions", coll}};
            if (!rep.collisions.empty()) {
                code = kFailed;
            }
        }
    }
    if (g.json()) {
        out << j.dump() << '\n';
        return code;
    }
    out << "count fragment=" << fragment_name(f) << " d=" << d << " n=" << n << ": " << total << '\n';
    if (enumerate && !j["enumeration"].is_null()) {
        const json &e = j["enumeration"];
        out << "enumerated " << e["checked"].get<std::uint64_t>() << ", distinct "
            << e["distinct"].get<std::uint64_t>() << ", collisions " << e["collisions"].size() << '\n';
    }
    return code;
}

}  // namespace

int run(int argc, const char *const *argv, std::istream &in, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact semantics, normal forms and equivalence for prime-dimension qudit circuits"};
    app.require_subcommand(1);
    Global g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", g.seed, "Run seed");
    app.add_option("--cap", g.cap, "State-space cap for oracle checks and enumeration");
    app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::Range(1u, 1024u));

    std::string file1 = "-", file2, frag, emit = "circuit";

    auto *sem = app.add_subcommand("semantics", "Print the affine map and phase polynomial");
    sem->fallthrough();
    sem->add_option("file", file1, "Circuit file, - for stdin");
    sem->add_option("--fragment", frag, "Force at least this fragment (lin|quad|cube)");

    auto *norm = app.add_subcommand("normalize", "Print the phase-affine normal form");
    norm->fallthrough();
    norm->add_option("file", file1, "Circuit file, - for stdin");
    norm->add_option("--emit", emit, "nf or circuit")->check(CLI::IsMember({"nf", "circuit"}));
    norm->add_option("--fragment", frag, "Force at least this fragment");

    auto *eq = app.add_subcommand("equiv", "Decide equivalence of two circuits");
    eq->fallthrough();
    eq->add_option("file1", file1)->required();
    eq->add_option("file2", file2)->required();

    std::string family = "all";
    std::vector<std::uint64_t> ds{2, 3, 5, 7};
    std::vector<std::size_t> ns{2, 3, 4};
    auto *ver = app.add_subcommand("verify", "Check the axiom catalogue and group presentations");
    ver->fallthrough();
    ver->add_option("--family", family)
        ->check(CLI::IsMember({"all", "aff", "lin", "quad", "cubic", "tables", "groups"}));
    ver->add_option("--d", ds, "Comma-separated moduli")->delimiter(',');
    ver->add_option("--n", ns, "Comma-separated wire counts for group presentations")->delimiter(',');

    FuzzOptions fo;
    auto *fz = app.add_subcommand("fuzz", "Randomized property checks");
    fz->fallthrough();
    fz->add_option("--count", fo.count);
    fz->add_option("--d", fo.d);
    fz->add_option("--n", fo.n);
    fz->add_option("--max-gates", fo.max_gates);
    fz->add_option("--rewrite-chain", fo.rewrite_chain);
    fz->add_flag("--mutate", fo.mutate, "Perturb every normal form (harness self-test)");

    std::string cfrag = "cube";
    std::uint64_t cd = 5;
    std::size_t cn = 1;
    bool enumerate = false;
    auto *cnt = app.add_subcommand("count", "Count diagonal normal forms");
    cnt->fallthrough();
    cnt->add_option("--fragment", cfrag);
    cnt->add_option("--d", cd);
    cnt->add_option("--n", cn);
    cnt->add_flag("--enumerate", enumerate, "Enumerate and check injectivity");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*sem) {
            return cmd_semantics(g, file1, frag, in, out);
        }
        if (*norm) {
            return cmd_normalize(g, file1, emit, frag, in, out);
        }
        if (*eq) {
            return cmd_equiv(g, file1, file2, in, out, err);
        }
        if (*ver) {
            return cmd_verify(g, family, ds, ns, out);
        }
        if (*fz) {
            return cmd_fuzz(g, fo, out, err);
        }
        if (*cnt) {
            return cmd_count(g, cfrag, cd, cn, enumerate, out, err);
        }
    } catch (const SyntaxError &e) {
        err << "syntax error: " << e.what() << '\n';
        return kInputError;
    } catch (const Error &e) {
        err << error_kind_name(e.kind()) << ": " << e.what() << '\n';
        return exit_code_for(e.kind());
    }
    return kInputError;
}

}  // namespace qupit::cli
