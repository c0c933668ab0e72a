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

#include <gtest/gtest.h>

#include <random>

#include "qupit/error.h"
#include "qupit/normal_form.h"
#include "qupit/random_circuit.h"

namespace qupit {
namespace {

PhaseAffineNF random_nf(const FieldCtx &f, std::size_t n, Fragment fr, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::uint64_t> u(0, f.modulus() - 1);
    DiagonalNF diag = DiagonalNF::zero(f, n, fr);
    diag.w = u(rng);
    for (auto *v : {&diag.z, &diag.s, &diag.t, &diag.cz, &diag.cs, &diag.sc, &diag.ccz}) {
        for (auto &x : *v) x = u(rng);
    }
    // Respect the fragment: higher-degree arrays stay zero.
    if (fr < Fragment::Cube) {
        for (auto *v : {&diag.t, &diag.cs, &diag.sc, &diag.ccz}) std::fill(v->begin(), v->end(), 0);
    }
    if (fr < Fragment::Quad) {
        for (auto *v : {&diag.s, &diag.cz}) std::fill(v->begin(), v->end(), 0);
    }
    Circuit aff = n ? random_circuit(f, n, 3 * n + 2, rng, 0) : Circuit(f, 0);
    PhaseAffineNF nf{diag, synthesize(interpret(aff).g)};
    return nf;
}

TEST(NormalForm, Examples) {
    Circuit c = parse_circuit("qupit d=5 n=1\nX 0\nZ 0\n");
    EXPECT_EQ(print_circuit(render(normalize(c))), "qupit d=5 n=1\nW ^1\nZ 0\nX 0\n");
    Circuit id = parse_circuit("qupit d=5 n=2\nCX 0 1\nCX 0 1 ^4\nZ 1 ^2\nZ 1 ^3\n");
    EXPECT_TRUE(render(normalize(id)).empty());
}

TEST(NormalForm, RenderingPreservesTheBasisTable) {
    std::mt19937_64 rng(201);
    for (std::uint64_t d : {2, 3, 5, 7}) {
        for (std::size_t n = 0; n <= 3; ++n) {
            for (int t = 0; t < 30; ++t) {
                Circuit c = random_circuit(FieldCtx(d), n, 40, rng);
                EXPECT_EQ(oracle_table(render(normalize(c))), oracle_table(c)) << print_circuit(c);
            }
        }
    }
}

TEST(NormalForm, Idempotent) {
    std::mt19937_64 rng(203);
    for (std::uint64_t d : {2, 3, 5, 7}) {
        for (std::size_t n = 0; n <= 5; ++n) {
            for (int t = 0; t < 20; ++t) {
                Circuit c = random_circuit(FieldCtx(d), n, 50, rng);
                PhaseAffineNF nf = normalize(c);
                Circuit r = render(nf);
                EXPECT_EQ(normalize(r), nf);
                EXPECT_EQ(print_circuit(render(normalize(r))), print_circuit(r));
            }
        }
    }
}

TEST(NormalForm, RandomFormsRoundTrip) {
    std::mt19937_64 rng(205);
    for (std::uint64_t d : {2, 3, 5, 7}) {
        FieldCtx f(d);
        for (std::size_t n = 0; n <= 4; ++n) {
            for (int fr = 1; fr <= max_degree_cap(f); ++fr) {
                for (int t = 0; t < 10; ++t) {
                    PhaseAffineNF nf = random_nf(f, n, static_cast<Fragment>(fr), rng);
                    EXPECT_EQ(normalize(render(nf)), nf);
                }
            }
        }
    }
}

TEST(NormalForm, DiagonalPolyRoundTrip) {
    std::mt19937_64 rng(207);
    FieldCtx f(7);
    for (int t = 0; t < 20; ++t) {
        PhaseAffineNF nf = random_nf(f, 4, Fragment::Cube, rng);
        EXPECT_EQ(DiagonalNF::from_poly(nf.diag.to_poly(), Fragment::Cube), nf.diag);
    }
}

// Small state spaces make accidental equalities frequent, so both verdicts
// get exercised.
TEST(NormalForm, EquivalenceMatchesOracle) {
    std::mt19937_64 rng(209);
    int equal = 0, unequal = 0;
    for (std::uint64_t d : {2, 3, 5}) {
        for (std::size_t n = 1; n <= 2; ++n) {
            for (int t = 0; t < 200; ++t) {
                std::size_t len = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
                Circuit a = random_circuit(FieldCtx(d), n, len, rng, 1);
                Circuit b = random_circuit(FieldCtx(d), n, len, rng, 1);
                bool eq = equivalent(a, b);
                EXPECT_EQ(eq, oracle_table(a) == oracle_table(b));
                EXPECT_EQ(eq, normalize(a) == normalize(b));
                (eq ? equal : unequal) += 1;
            }
        }
    }
    EXPECT_GT(equal, 10);
    EXPECT_GT(unequal, 10);
}

TEST(NormalForm, EquivalenceShapeMismatch) {
    try {
        equivalent(Circuit(FieldCtx(5), 1), Circuit(FieldCtx(5), 2));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
    }
    EXPECT_THROW(equivalent(Circuit(FieldCtx(5), 1), Circuit(FieldCtx(7), 1)), Error);
}

TEST(NormalForm, Counts) {
    EXPECT_EQ(count_diagonal_forms(1, Fragment::Cube, FieldCtx(5)), 625);
    EXPECT_EQ(count_diagonal_forms(2, Fragment::Cube, FieldCtx(5)), 9765625);
    EXPECT_EQ(count_diagonal_forms(2, Fragment::Quad, FieldCtx(3)), 729);
    EXPECT_EQ(count_diagonal_forms(1, Fragment::Lin, FieldCtx(2)), 4);
    EXPECT_EQ(count_diagonal_forms(2, Fragment::Lin, FieldCtx(2)), 8);
    EXPECT_THROW(count_diagonal_forms(1, Fragment::Quad, FieldCtx(2)), Error);
    EXPECT_EQ(diagonal_dimension(3, Fragment::Cube), 20u);
    // d^(1+3n+3C(n,2)+C(n,3)) against a naive big power of C(n+3,3).
    for (std::size_t n = 0; n <= 6; ++n) {
        std::size_t e = (n + 3) * (n + 2) * (n + 1) / 6;
        BigInt naive = 1;
        for (std::size_t i = 0; i < e; ++i) naive *= 11;
        EXPECT_EQ(count_diagonal_forms(n, Fragment::Cube, FieldCtx(11)), naive) << n;
    }
}

TEST(NormalForm, EnumerationHasNoCollisions) {
    InjectivityReport r = enumerate_and_check_injectivity(1, Fragment::Cube, FieldCtx(5), 1000000);
    EXPECT_TRUE(r.complete);
    EXPECT_EQ(r.checked, 625u);
    EXPECT_TRUE(r.collisions.empty());
    InjectivityReport partial = enumerate_and_check_injectivity(2, Fragment::Cube, FieldCtx(5), 500);
    EXPECT_FALSE(partial.complete);
    EXPECT_EQ(partial.checked, 500u);
    EXPECT_TRUE(partial.collisions.empty());
}

TEST(NormalForm, PerformanceShape) {
    std::mt19937_64 rng(211);
    Circuit c = random_circuit(FieldCtx(7), 20, 2000, rng);
    PhaseAffineNF nf = normalize(c);
    EXPECT_EQ(interpret(render(nf)), interpret(c));
}

}  // namespace
}  // namespace qupit
