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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Limits are exact equalities plus the wall-clock budgets
// pinned below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qupit/affine.h"
#include "qupit/axioms.h"
#include "qupit/group_presentation.h"
#include "qupit/normal_form.h"
#include "qupit/random_circuit.h"
#include "qupit/semantics.h"

namespace qupit {
namespace {

constexpr double kBinomialBudgetS = 1.0;
constexpr double kSoundnessBudgetS = 30.0;
constexpr double kOracleBudgetS = 60.0;
constexpr double kNormalizationBudgetS = 120.0;
constexpr double kCountingBudgetS = 30.0;
constexpr double kGroupBudgetS = 30.0;
constexpr double kPerformanceBudgetS = 5.0;

constexpr std::uint64_t kCorpusSeed = 0x5eed0001;
constexpr std::size_t kCircuitsPerCell = 1000;
constexpr std::size_t kMaxGates = 200;
constexpr std::size_t kAncestors = 500;
constexpr std::size_t kRewriteChain = 20;
constexpr std::size_t kRandomPairs = 500;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int g_failed = 0;

void report(int id, const std::string &name, bool ok, const std::string &detail, double secs,
            double budget) {
    bool in_time = budget <= 0 || secs < budget;
    bool pass = ok && in_time;
    g_failed += pass ? 0 : 1;
    std::printf("%s %d %s: %s (%.2f s", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str(), secs);
    if (budget > 0) std::printf(", budget %.0f s", budget);
    std::printf(")%s\n", in_time ? "" : " over budget");
    std::fflush(stdout);
}

struct CorpusEntry {
    std::uint64_t d;
    std::size_t n;
    Circuit c;
};

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> out;
    std::uint64_t cell = 0;
    for (std::uint64_t d : {2, 3, 5}) {
        for (std::size_t n : {1, 2, 3}) {
            for (std::size_t i = 0; i < kCircuitsPerCell; ++i) {
                std::mt19937_64 rng(split_seed(split_seed(kCorpusSeed, cell), i));
                std::size_t len = std::uniform_int_distribution<std::size_t>(0, kMaxGates)(rng);
                out.push_back({d, n, random_circuit(FieldCtx(d), n, len, rng)});
            }
            ++cell;
        }
    }
    return out;
}

// 1 ----------------------------------------------------------------------
void binomial_identities() {
    auto t0 = Clock::now();
    std::size_t checks = 0, bad = 0;
    auto expect = [&](bool v) {
        ++checks;
        bad += v ? 0 : 1;
    };
    for (std::uint64_t d : {3, 5, 7, 11}) {
        FieldCtx f(d);
        const bool cubic = f.has_cubic();
        for (std::uint64_t x = 0; x < d; ++x) {
            // Independent check of the field binomials against integers.
            expect(f.binom2(x) == (x * (x ? x - 1 : 0) / 2) % d);
            expect(f.mul(2, f.binom2(x)) == f.mul(x, f.sub(x, 1)));
            expect(f.binom2(f.add(x, 1)) == f.add(f.binom2(x), x));
            expect(f.mul(x, x) == f.add(f.mul(2, f.binom2(x)), x));
            if (cubic) {
                expect(f.binom3(x) == (x < 3 ? 0 : x * (x - 1) * (x - 2) / 6 % d));
                expect(f.binom3(f.add(x, 1)) == f.add(f.binom3(x), f.binom2(x)));
                std::uint64_t rhs = f.add(f.add(f.mul(6, f.binom3(x)), f.mul(6, f.binom2(x))), x);
                expect(f.mul(f.mul(x, x), x) == rhs);
            }
            for (std::uint64_t y = 0; y < d; ++y) {
                expect(f.binom2(f.add(x, y)) == f.add(f.add(f.binom2(x), f.binom2(y)), f.mul(x, y)));
                expect(f.mul(f.mul(x, x), y) == f.add(f.mul(f.mul(2, y), f.binom2(x)), f.mul(x, y)));
                expect(f.mul(x, f.mul(y, y)) == f.add(f.mul(f.mul(2, x), f.binom2(y)), f.mul(x, y)));
                const std::uint64_t k = y;
                expect(f.binom2(f.mul(k, x)) ==
                       f.add(f.mul(f.mul(k, k), f.binom2(x)), f.mul(f.binom2(k), x)));
                if (cubic) {
                    std::uint64_t add3 = f.add(f.binom3(x), f.binom3(y));
                    add3 = f.add(add3, f.mul(f.binom2(x), y));
                    add3 = f.add(add3, f.mul(x, f.binom2(y)));
                    expect(f.binom3(f.add(x, y)) == add3);
                    std::uint64_t k3 = f.mul(f.mul(k, k), k);
                    std::uint64_t scale3 = f.mul(k3, f.binom3(x));
                    scale3 = f.add(scale3, f.mul(f.mul(f.mul(2, k), f.binom2(k)), f.binom2(x)));
                    scale3 = f.add(scale3, f.mul(f.binom3(k), x));
                    expect(f.binom3(f.mul(k, x)) == scale3);
                }
            }
        }
    }
    report(1, "binomial-identities", bad == 0,
           std::to_string(checks) + " identities, " + std::to_string(bad) + " violations", seconds_since(t0),
           kBinomialBudgetS);
}

// 2 ----------------------------------------------------------------------
void soundness_sweep() {
    auto t0 = Clock::now();
    std::size_t checked = 0, failed = 0;
    std::string first_failure;
    bool coverage = true;
    for (std::uint64_t d : {2, 3, 5, 7}) {
        std::size_t per_family[6] = {0, 0, 0, 0, 0, 0};
        for (const AxiomInstance &a : catalogue(FieldCtx(d))) {
            ++checked;
            ++per_family[static_cast<int>(a.family)];
            AxiomVerdict v = verify_axiom(a);
            if (!v.ok || !v.oracle_checked) {
                ++failed;
                if (first_failure.empty()) first_failure = a.label();
            }
        }
        coverage = coverage && per_family[0] > 0 && per_family[1] > 0;
        if (d >= 3) coverage = coverage && per_family[2] > 0;
        if (d >= 5) coverage = coverage && per_family[3] > 0 && per_family[4] > 0 && per_family[5] > 0;
    }
    std::string detail = std::to_string(checked) + " instances, " + std::to_string(failed) + " failures";
    if (!first_failure.empty()) detail += ", first " + first_failure;
    if (!coverage) detail += ", missing family";
    report(2, "soundness-sweep", failed == 0 && coverage, detail, seconds_since(t0), kSoundnessBudgetS);
}

// 3 ----------------------------------------------------------------------
void oracle_agreement(const std::vector<CorpusEntry> &corpus) {
    auto t0 = Clock::now();
    std::size_t bad = 0;
    for (const CorpusEntry &e : corpus) {
        bad += table_of(interpret(e.c)) == oracle_table(e.c) ? 0 : 1;
    }
    report(3, "oracle-agreement",
           bad == 0 && corpus.size() == 9 * kCircuitsPerCell,
           std::to_string(corpus.size()) + " circuits, " + std::to_string(bad) + " mismatches",
           seconds_since(t0), kOracleBudgetS);
}

// 4 ----------------------------------------------------------------------
void normalization(const std::vector<CorpusEntry> &corpus) {
    auto t0 = Clock::now();
    std::size_t bad_render = 0;
    for (const CorpusEntry &e : corpus) {
        bad_render += oracle_table(render(normalize(e.c))) == oracle_table(e.c) ? 0 : 1;
    }

    std::size_t bad_chain = 0, changed = 0;
    for (std::size_t i = 0; i < kAncestors; ++i) {
        const Circuit &anc = corpus[(i * 37) % corpus.size()].c;
        std::mt19937_64 rng(split_seed(kCorpusSeed ^ 0xa11ce, i));
        Circuit m = anc;
        for (std::size_t k = 0; k < kRewriteChain; ++k) m = random_sound_rewrite(m, rng());
        changed += m == anc ? 0 : 1;
        bad_chain += equivalent(anc, m) ? 0 : 1;
    }

    // Short low-degree pairs on tiny spaces, so both verdicts occur.
    std::size_t bad_pairs = 0, equal_pairs = 0;
    const std::uint64_t ds[] = {2, 3, 5};
    for (std::size_t i = 0; i < kRandomPairs; ++i) {
        std::mt19937_64 rng(split_seed(kCorpusSeed ^ 0xbeef, i));
        std::uint64_t d = ds[i % 3];
        std::size_t n = 1 + (i / 3) % 3;
        std::size_t len = std::uniform_int_distribution<std::size_t>(0, i % 2 ? 4 : 40)(rng);
        int deg = static_cast<int>(i % 4);
        Circuit a = random_circuit(FieldCtx(d), n, len, rng, deg);
        Circuit b = random_circuit(FieldCtx(d), n, len, rng, deg);
        bool eq = equivalent(a, b);
        equal_pairs += eq ? 1 : 0;
        bad_pairs += eq == (oracle_table(a) == oracle_table(b)) ? 0 : 1;
    }
    std::string detail = "(a) " + std::to_string(bad_render) + "/" + std::to_string(corpus.size()) +
                         " render mismatches; (b) " + std::to_string(bad_chain) + "/" +
                         std::to_string(kAncestors) + " chains inequivalent, " + std::to_string(changed) +
                         " mutated; (c) " + std::to_string(bad_pairs) + "/" + std::to_string(kRandomPairs) +
                         " verdict disagreements, " + std::to_string(equal_pairs) + " equal";
    report(4, "normalization-soundness-completeness", bad_render == 0 && bad_chain == 0 && bad_pairs == 0,
           detail, seconds_since(t0), kNormalizationBudgetS);
}

// 5 ----------------------------------------------------------------------
void counting() {
    auto t0 = Clock::now();
    struct Case {
        std::size_t n;
        Fragment f;
        std::uint64_t d;
        std::uint64_t expect;
    };
    bool ok = true;
    std::string detail;
    for (const Case &c : {Case{1, Fragment::Cube, 5, 625}, Case{2, Fragment::Quad, 3, 729},
                          Case{1, Fragment::Lin, 2, 4}}) {
        InjectivityReport r = enumerate_and_check_injectivity(c.n, c.f, FieldCtx(c.d), 1000000);
        std::uint64_t distinct = r.checked - r.collisions.size();
        ok = ok && r.complete && r.total == c.expect && distinct == c.expect;
        detail += std::to_string(distinct) + " ";
    }
    detail += "distinct forms; ";
    std::size_t identities = 0;
    for (std::uint64_t d : {2, 3, 5, 7, 11}) {
        for (std::size_t n = 0; n <= 6; ++n) {
            std::size_t c2 = n * (n - (n ? 1 : 0)) / 2;
            std::size_t c3 = n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
            std::size_t lhs_e = 1 + 3 * n + 3 * c2 + c3;
            std::size_t rhs_e = (n + 3) * (n + 2) * (n + 1) / 6;
            BigInt lhs = boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(lhs_e));
            BigInt rhs = boost::multiprecision::pow(BigInt(d), static_cast<unsigned>(rhs_e));
            ok = ok && lhs == rhs;
            if (FieldCtx(d).has_cubic()) ok = ok && count_diagonal_forms(n, Fragment::Cube, FieldCtx(d)) == rhs;
            ++identities;
        }
    }
    detail += std::to_string(identities) + " big-int identities";
    report(5, "uniqueness-counting", ok, detail, seconds_since(t0), kCountingBudgetS);
}

// 6 ----------------------------------------------------------------------
void groups() {
    auto t0 = Clock::now();
    std::size_t checked = 0, failed = 0;
    bool torus_weyl = true;
    for (std::uint64_t d : {2, 3, 5}) {
        FieldCtx f(d);
        for (std::size_t n : {2, 3, 4}) {
            for (GroupFamily g : {GroupFamily::SL, GroupFamily::GL, GroupFamily::AGL}) {
                GroupVerdict v = verify_group_presentation(n, f, g);
                checked += v.checked;
                failed += v.failures.size();
            }
        }
        bool torus = false, weyl = false;
        for (const GroupRelation &r : group_relations(2, f, GroupFamily::SL)) {
            torus = torus || r.id == "Torus";
            weyl = weyl || r.id == "Weyl";
        }
        torus_weyl = torus_weyl && torus && weyl;
    }
    report(6, "group-presentations", failed == 0 && torus_weyl,
           std::to_string(checked) + " relation instances, " + std::to_string(failed) + " failures",
           seconds_since(t0), kGroupBudgetS);
}

// 7 ----------------------------------------------------------------------
Circuit circuit_of(const AffineMap &g) {
    Circuit c(g.ctx(), g.n());
    append_affine(c, synthesize(g));
    return c;
}

void idempotence_and_round_trip(const std::vector<CorpusEntry> &corpus) {
    auto t0 = Clock::now();
    std::size_t bad_idem = 0;
    for (const CorpusEntry &e : corpus) {
        PhaseAffineNF nf = normalize(e.c);
        bad_idem += normalize(render(nf)) == nf ? 0 : 1;
    }
    std::size_t maps = 0, bad_maps = 0;
    for (std::uint64_t d : {2, 3, 5, 7}) {
        FieldCtx f(d);
        for (std::uint64_t a = 1; a < d; ++a) {
            for (std::uint64_t b = 0; b < d; ++b) {
                AffineMap g(f, 1, {a}, {b});
                ++maps;
                bad_maps += interpret(circuit_of(g)).g == g ? 0 : 1;
            }
        }
    }
    FieldCtx f3(3);
    for (std::uint64_t m = 0; m < 81; ++m) {
        std::vector<std::uint64_t> a{m % 3, m / 3 % 3, m / 9 % 3, m / 27};
        if ((a[0] * a[3] + 9 - a[1] * a[2] % 3) % 3 == 0) continue;
        for (std::uint64_t t = 0; t < 9; ++t) {
            AffineMap g(f3, 2, a, {t % 3, t / 3});
            ++maps;
            bad_maps += interpret(circuit_of(g)).g == g ? 0 : 1;
        }
    }
    // |AGL_1| summed over d in {2,3,5,7} is 2+6+20+42; |AGL_2(F_3)| is 48*9.
    bool complete = maps == 70 + 432;
    report(7, "idempotence-affine-round-trip", bad_idem == 0 && bad_maps == 0 && complete,
           std::to_string(bad_idem) + "/" + std::to_string(corpus.size()) + " non-idempotent; " +
               std::to_string(bad_maps) + "/" + std::to_string(maps) + " synthesis mismatches",
           seconds_since(t0), 0);
}

// 8 ----------------------------------------------------------------------
void performance() {
    std::mt19937_64 rng(kCorpusSeed ^ 0x8);
    FieldCtx f(7);
    Circuit c = random_circuit(f, 20, 10000, rng, 3);
    auto t0 = Clock::now();
    PhaseAffineNF nf = normalize(c);
    double secs = seconds_since(t0);
    bool cubic = nf.diag.fragment == Fragment::Cube;
    report(8, "performance-normalize-10000-gates", cubic && c.size() == 10000,
           "d=7 n=20, " + std::to_string(c.size()) + " gates", secs, kPerformanceBudgetS);
}

}  // namespace
}  // namespace qupit

int main() {
    using namespace qupit;
    binomial_identities();
    soundness_sweep();
    auto corpus = build_corpus();
    oracle_agreement(corpus);
    normalization(corpus);
    counting();
    groups();
    idempotence_and_round_trip(corpus);
    performance();
    std::printf("%d criteria failed\n", g_failed);
    return g_failed == 0 ? 0 : 1;
}
