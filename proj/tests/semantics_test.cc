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
#include "qupit/random_circuit.h"
#include "qupit/semantics.h"

namespace qupit {
namespace {

using Vec = std::vector<std::uint64_t>;

Circuit one_gate(std::uint64_t d, std::size_t n, GateKind k, std::vector<std::uint32_t> w, std::int64_t p = 1) {
    Circuit c(FieldCtx(d), n);
    c.append(k, w, p);
    return c;
}

TEST(Semantics, EmptyCircuitIsIdentity) {
    FieldCtx f(5);
    PhaseAffineSem s = interpret(Circuit(f, 3));
    EXPECT_TRUE(s.g.is_identity());
    EXPECT_TRUE(s.q.is_zero());
    EXPECT_EQ(s.fragment, Fragment::Lin);
}

// Hand-computed tables for single generators at d=5, n=1 or 2.
TEST(Semantics, OracleOnGenerators) {
    BasisTable z = oracle_table(one_gate(5, 1, GateKind::Z, {0}, 2));
    EXPECT_EQ(z.phase, (Vec{0, 2, 4, 1, 3}));
    EXPECT_EQ(z.image, (Vec{0, 1, 2, 3, 4}));
    BasisTable s = oracle_table(one_gate(5, 1, GateKind::S, {0}));
    EXPECT_EQ(s.phase, (Vec{0, 0, 1, 3, 1}));  // C(x,2) mod 5
    BasisTable t = oracle_table(one_gate(5, 1, GateKind::T, {0}));
    EXPECT_EQ(t.phase, (Vec{0, 0, 0, 1, 4}));  // C(x,3) mod 5
    BasisTable w = oracle_table(one_gate(5, 1, GateKind::W, {}, 3));
    EXPECT_EQ(w.phase, (Vec{3, 3, 3, 3, 3}));
    BasisTable m = oracle_table(one_gate(5, 1, GateKind::M, {0}, 2));
    EXPECT_EQ(m.image, (Vec{0, 2, 4, 1, 3}));
    // Index = 5*x0 + x1.
    BasisTable cx = oracle_table(one_gate(5, 2, GateKind::CX, {0, 1}));
    EXPECT_EQ(cx.image[5 * 2 + 4], 5u * 2 + 1);
    BasisTable sc = oracle_table(one_gate(5, 2, GateKind::SC, {0, 1}));
    EXPECT_EQ(sc.phase[5 * 3 + 2], 2u * 3 % 5);  // x1 * C(x0,2) at (3,2)
    BasisTable cs = oracle_table(one_gate(5, 2, GateKind::CS, {0, 1}));
    EXPECT_EQ(cs.phase[5 * 3 + 2], 3u * 1 % 5);  // x0 * C(x1,2) at (3,2)
}

TEST(Semantics, PointIndexRoundTrip) {
    EXPECT_EQ(point_of_index(7, 2, 5), (Vec{1, 2}));
    EXPECT_EQ(index_of_point({1, 2}, 5), 7u);
    for (std::uint64_t i = 0; i < 125; ++i) {
        EXPECT_EQ(index_of_point(point_of_index(i, 3, 5), 5), i);
    }
}

TEST(Semantics, StateSpaceCap) {
    EXPECT_EQ(state_space_size(FieldCtx(5), 3, 1000), 125u);
    try {
        state_space_size(FieldCtx(5), 9, kDefaultStateCap);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::StateSpaceTooLarge);
    }
    EXPECT_THROW(oracle_table(Circuit(FieldCtx(7), 8)), Error);
}

TEST(Semantics, FragmentInferenceAndOverride) {
    EXPECT_EQ(interpret(one_gate(5, 2, GateKind::CX, {0, 1})).fragment, Fragment::Lin);
    EXPECT_EQ(interpret(one_gate(5, 2, GateKind::CZ, {0, 1})).fragment, Fragment::Quad);
    EXPECT_EQ(interpret(one_gate(5, 2, GateKind::SC, {0, 1})).fragment, Fragment::Cube);
    PhaseAffineSem s = interpret(one_gate(5, 1, GateKind::Z, {0}), Fragment::Cube);
    EXPECT_EQ(s.fragment, Fragment::Cube);
    EXPECT_EQ(s.q.degree_cap(), 3);
    try {
        interpret(one_gate(3, 1, GateKind::Z, {0}), Fragment::Cube);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::FragmentUnavailable);
    }
    EXPECT_EQ(fragment_from_name("cubic"), Fragment::Cube);
    EXPECT_FALSE(fragment_from_name("quartic"));
}

TEST(Semantics, OracleAgreementOnRandomCircuits) {
    std::mt19937_64 rng(101);
    for (std::uint64_t d : {2, 3, 5, 7}) {
        for (std::size_t n = 0; n <= 3; ++n) {
            for (int t = 0; t < 40; ++t) {
                Circuit c = random_circuit(FieldCtx(d), n, 40, rng);
                EXPECT_EQ(table_of(interpret(c)), oracle_table(c)) << print_circuit(c);
            }
        }
    }
}

TEST(Semantics, ComposeAndTensorAreHomomorphic) {
    std::mt19937_64 rng(103);
    for (std::uint64_t d : {2, 5, 7}) {
        FieldCtx f(d);
        for (int t = 0; t < 20; ++t) {
            Circuit a = random_circuit(f, 3, 20, rng), b = random_circuit(f, 3, 20, rng);
            EXPECT_EQ(interpret(compose(b, a)), compose(interpret(b), interpret(a)));
            Circuit c = random_circuit(f, 2, 20, rng);
            EXPECT_EQ(interpret(tensor(a, c)), tensor(interpret(a), interpret(c)));
        }
    }
}

TEST(Semantics, WitnessIsSmallestDifference) {
    PhaseAffineSem a = interpret(one_gate(5, 1, GateKind::Z, {0}));
    PhaseAffineSem b = interpret(one_gate(5, 1, GateKind::Z, {0}, 2));
    EXPECT_EQ(find_witness(a, b), (Vec{1}));
    EXPECT_FALSE(find_witness(a, a));
    EXPECT_EQ(first_difference(table_of(a), table_of(b)), (Vec{1}));
    EXPECT_FALSE(tables_equal(table_of(a), table_of(b)));
}

// Above the cap the witness search is greedy; any answer must be genuine.
TEST(Semantics, WitnessAboveCapIsGenuine) {
    std::mt19937_64 rng(107);
    FieldCtx f(7);
    int found = 0;
    for (int t = 0; t < 30; ++t) {
        Circuit c1 = random_circuit(f, 12, 60, rng);
        Circuit c2 = c1;
        c2.append(random_gate(f, 12, legal_gate_kinds(f, 12), rng));
        PhaseAffineSem s1 = interpret(c1), s2 = interpret(c2);
        if (s1 == s2) continue;
        auto w = find_witness(s1, s2);
        if (!w) continue;
        ++found;
        EXPECT_TRUE(s1.g.apply(*w) != s2.g.apply(*w) || s1.q.eval(*w) != s2.q.eval(*w));
    }
    EXPECT_GT(found, 20);
}

}  // namespace
}  // namespace qupit
