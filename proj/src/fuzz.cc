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

#include "qupit/fuzz.h"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "qupit/axioms.h"
#include "qupit/error.h"
#include "qupit/normal_form.h"
#include "qupit/random_circuit.h"

namespace qupit {

namespace {

struct CaseResult {
    bool oracle = false;
    std::vector<FuzzFailure> failures;
};

CaseResult run_case(const FuzzOptions &o, const FieldCtx &ctx, bool oracle_ok, std::uint64_t index) {
    CaseResult res;
    const std::uint64_t seed = split_seed(o.seed, index);
    std::mt19937_64 rng(seed);
    std::size_t len = std::uniform_int_distribution<std::size_t>(0, o.max_gates)(rng);
    Circuit c = random_circuit(ctx, o.n, len, rng);
    auto fail = [&](const std::string &prop) {
        res.failures.push_back({index, seed, prop, print_circuit(c)});
    };

    PhaseAffineSem sem = interpret(c);
    PhaseAffineNF nf = normal_form_of(sem);
    if (o.mutate) {
        nf.diag.w = ctx.add(nf.diag.w, 1);
    }
    Circuit rendered = render(nf);
    if (!(interpret(rendered) == sem)) {
        fail("normalize-preserves-semantics");
    }
    if (oracle_ok) {
        res.oracle = true;
        BasisTable t = oracle_table(c, o.cap);
        if (!(table_of(sem, o.cap) == t)) {
            fail("oracle-agreement");
        }
        if (!(oracle_table(rendered, o.cap) == t)) {
            fail("normalize-oracle");
        }
    }

    Circuit mutant = c;
    for (std::size_t k = 0; k < o.rewrite_chain; ++k) {
        mutant = random_sound_rewrite(mutant, rng());
    }
    if (!equivalent(c, mutant)) {
        fail("rewrite-chain-equivalent");
    }
    return res;
}

}  // namespace

FuzzReport run_fuzz(const FuzzOptions &o) {
    FieldCtx ctx(o.d);
    bool oracle_ok = true;
    try {
        state_space_size(ctx, o.n, o.cap);
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::StateSpaceTooLarge) {
            throw;
        }
        oracle_ok = false;
    }
    // Warm the rewrite-rule cache before workers race for it.
    if (o.count > 0) {
        random_sound_rewrite(Circuit(ctx, o.n), 0);
    }

    std::vector<CaseResult> results(o.count);
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t i = next++; i < o.count; i = next++) {
            results[i] = run_case(o, ctx, oracle_ok, i);
        }
    };
    unsigned jobs = std::max(1u, o.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    FuzzReport rep;
    rep.checked = o.count;
    for (CaseResult &r : results) {
        (r.oracle ? rep.oracle_checked : rep.oracle_skipped) += 1;
        for (FuzzFailure &f : r.failures) {
            rep.failures.push_back(std::move(f));
        }
    }
    return rep;
}

}  // namespace qupit
