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
#include <set>

#include "qupit/affine.h"
#include "qupit/error.h"
#include "qupit/phase_poly.h"

namespace qupit {
namespace {

using Vec = std::vector<std::uint64_t>;

std::uint64_t int_binom(std::uint64_t x, int k) {
    std::uint64_t num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        if (x < static_cast<std::uint64_t>(i)) return 0;
        num *= (x - i);
        den *= (i + 1);
    }
    return num / den;
}

// Reference for one monomial: integer binomials of representatives.
std::uint64_t ref_monomial(const Monomial &m, const Vec &x, std::uint64_t d) {
    auto B = [&](std::uint32_t w, int k) { return int_binom(x[w], k) % d; };
    switch (m.kind) {
        case MonoKind::Const: return 1;
        case MonoKind::Lin: return B(m.w[0], 1);
        case MonoKind::Quad: return B(m.w[0], 2);
        case MonoKind::Cub: return B(m.w[0], 3);
        case MonoKind::Prod2: return B(m.w[0], 1) * B(m.w[1], 1) % d;
        case MonoKind::LinQuad: return B(m.w[0], 1) * B(m.w[1], 2) % d;
        case MonoKind::Prod3: return B(m.w[0], 1) * B(m.w[1], 1) % d * B(m.w[2], 1) % d;
    }
    return 0;
}

PhasePoly random_poly(const FieldCtx &f, std::size_t n, int cap, std::mt19937_64 &rng) {
    PhasePoly q(f, n, cap);
    std::uniform_int_distribution<std::uint64_t> u(0, f.modulus() - 1);
    MonomialIndexer(n, cap).for_each([&](std::size_t, const Monomial &m) { q.set(m, u(rng)); });
    return q;
}

AffineMap random_map(const FieldCtx &f, std::size_t n, std::mt19937_64 &rng) {
    // Products of random generators are always invertible.
    AffineMap g = AffineMap::identity(f, n);
    std::uniform_int_distribution<std::uint64_t> u(1, f.modulus() - 1);
    std::uniform_int_distribution<std::uint32_t> w(0, static_cast<std::uint32_t>(n - 1));
    for (int k = 0; k < 4 * static_cast<int>(n) + 4; ++k) {
        std::uint32_t a = w(rng), b = w(rng);
        g.post_apply({AffineKind::X, a, 0, u(rng)});
        g.post_apply({AffineKind::M, a, 0, u(rng)});
        if (a != b) g.post_apply({AffineKind::CX, a, b, u(rng)});
    }
    return g;
}

Vec random_point(std::size_t n, std::uint64_t d, std::mt19937_64 &rng) {
    std::uniform_int_distribution<std::uint64_t> u(0, d - 1);
    Vec x(n);
    for (auto &v : x) v = u(rng);
    return x;
}

TEST(Monomial, IndexerIsADenseBijection) {
    for (std::size_t n = 0; n <= 6; ++n) {
        for (int cap = 1; cap <= 3; ++cap) {
            MonomialIndexer ix(n, cap);
            std::set<Monomial> seen;
            std::size_t expect = 0;
            Monomial prev;
            ix.for_each([&](std::size_t i, const Monomial &m) {
                EXPECT_EQ(i, expect++);
                EXPECT_EQ(ix.index(m), i);
                EXPECT_LE(m.degree(), cap);
                if (i > 0) EXPECT_TRUE(prev < m);
                prev = m;
                seen.insert(m);
            });
            EXPECT_EQ(seen.size(), ix.size());
        }
    }
    // 1 + 3n + 3C(n,2) + C(n,3) at cap 3.
    EXPECT_EQ(MonomialIndexer(4, 3).size(), 1u + 12 + 18 + 4);
    EXPECT_EQ(MonomialIndexer(3, 2).size(), 1u + 6 + 3);
    EXPECT_EQ(MonomialIndexer(3, 1).size(), 4u);
}

TEST(Monomial, EvaluationMatchesIntegerReference) {
    for (std::uint64_t d : {5, 7}) {
        FieldCtx f(d);
        MonomialIndexer ix(3, 3);
        std::mt19937_64 rng(d);
        for (int t = 0; t < 50; ++t) {
            Vec x = random_point(3, d, rng);
            ix.for_each([&](std::size_t, const Monomial &m) {
                EXPECT_EQ(eval_monomial(f, m, x), ref_monomial(m, x, d)) << m.to_string();
            });
        }
    }
}

TEST(PhasePoly, CapValidation) {
    try {
        PhasePoly q(FieldCtx(3), 2, 3);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.kind(), ErrorKind::FragmentUnavailable);
    }
    EXPECT_THROW(PhasePoly(FieldCtx(2), 2, 2), Error);
    EXPECT_THROW(PhasePoly(FieldCtx(5), 2, 4), Error);
    EXPECT_NO_THROW(PhasePoly(FieldCtx(2), 2, 1));
    PhasePoly q(FieldCtx(5), 2, 2);
    EXPECT_THROW(q.add_term(Monomial::cub(0), 1), Error);
    EXPECT_THROW(q.add_term(Monomial::lin(2), 1), Error);
}

TEST(PhasePoly, GeneratorPhases) {
    FieldCtx f(7);
    auto cs = PhasePoly::from_generator(DiagonalKind::CS, {0, 1}, 2, 2, f);
    EXPECT_EQ(cs.coeff(Monomial::lin_quad(0, 1)), 2u);
    auto sc = PhasePoly::from_generator(DiagonalKind::SC, {0, 1}, 1, 2, f);
    EXPECT_EQ(sc.coeff(Monomial::lin_quad(1, 0)), 1u);
    auto w = PhasePoly::from_generator(DiagonalKind::W, {}, 3, 0, f);
    EXPECT_EQ(w.coeff(Monomial::constant()), 3u);
    EXPECT_THROW(PhasePoly::from_generator(DiagonalKind::CZ, {0, 0}, 1, 2, f), Error);
    EXPECT_THROW(PhasePoly::from_generator(DiagonalKind::Z, {3}, 1, 2, f), Error);
}

TEST(PhasePoly, SubstitutionThroughCX) {
    FieldCtx f(5);
    PhasePoly t = PhasePoly::from_generator(DiagonalKind::T, {1}, 1, 2, f);
    AffineMap cx = AffineMap::from_generator(f, 2, {AffineKind::CX, 0, 1, 1});
    PhasePoly s = substitute_affine(t, cx);
    EXPECT_EQ(s.terms().size(), 4u);
    for (const Monomial &m : {Monomial::cub(0), Monomial::cub(1), Monomial::lin_quad(0, 1),
                              Monomial::lin_quad(1, 0)}) {
        EXPECT_EQ(s.coeff(m), 1u) << m.to_string();
    }
}

// q o g evaluated symbolically versus pointwise.
TEST(PhasePoly, SubstitutionAgreesWithPointwiseComposition) {
    std::mt19937_64 rng(99);
    for (std::uint64_t d : {2, 3, 5, 7, 11}) {
        FieldCtx f(d);
        for (std::size_t n = 1; n <= 4; ++n) {
            for (int cap = 1; cap <= max_degree_cap(f); ++cap) {
                for (int t = 0; t < 5; ++t) {
                    PhasePoly q = random_poly(f, n, cap, rng);
                    AffineMap g = random_map(f, n, rng);
                    PhasePoly s = substitute_affine(q, g);
                    EXPECT_LE(s.max_degree(), q.max_degree());
                    for (int k = 0; k < 10; ++k) {
                        Vec x = random_point(n, d, rng);
                        EXPECT_EQ(s.eval(x), q.eval(g.apply(x)));
                    }
                }
            }
        }
    }
}

TEST(PhasePoly, DenseAccumulatorMatchesSparseSubstitution) {
    std::mt19937_64 rng(5);
    FieldCtx f(7);
    for (int t = 0; t < 20; ++t) {
        PhasePoly q = random_poly(f, 4, 3, rng);
        AffineMap g = random_map(f, 4, rng);
        detail::DenseAccumulator acc(f, 4, 3);
        detail::LinearForms forms{4, g.matrix().data(), g.translation().data()};
        for (const auto &[m, c] : q.terms()) acc.add_substituted(m, c, forms);
        EXPECT_EQ(acc.to_poly(), substitute_affine(q, g));
    }
}

// Column rank of the basis-evaluation matrix over F_d; full rank means the
// coefficient map is injective, so equal tables force equal polynomials.
std::size_t eval_rank(const FieldCtx &f, std::size_t n, int cap) {
    std::uint64_t d = f.modulus();
    MonomialIndexer ix(n, cap);
    std::vector<Monomial> monos;
    ix.for_each([&](std::size_t, const Monomial &m) { monos.push_back(m); });
    std::uint64_t pts = 1;
    for (std::size_t i = 0; i < n; ++i) pts *= d;
    std::vector<Vec> rows;
    for (std::uint64_t p = 0; p < pts; ++p) {
        Vec x(n);
        std::uint64_t r = p;
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = r % d;
            r /= d;
        }
        Vec row;
        for (const Monomial &m : monos) row.push_back(ref_monomial(m, x, d));
        rows.push_back(row);
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < monos.size() && rank < rows.size(); ++c) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[rank]);
        std::uint64_t inv = f.inv(rows[rank][c]);
        for (auto &v : rows[rank]) v = v * inv % d;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            std::uint64_t k = rows[r][c];
            for (std::size_t cc = 0; cc < monos.size(); ++cc) {
                rows[r][cc] = (rows[r][cc] + (d - k) * rows[rank][cc]) % d;
            }
        }
        ++rank;
    }
    return rank;
}

TEST(PhasePoly, BasisIsUniqueAtSmallN) {
    for (std::uint64_t d : {2, 3, 5, 7}) {
        FieldCtx f(d);
        for (std::size_t n = 1; n <= 2; ++n) {
            for (int cap = 1; cap <= max_degree_cap(f); ++cap) {
                EXPECT_EQ(eval_rank(f, n, cap), MonomialIndexer(n, cap).size())
                    << "d=" << d << " n=" << n << " cap=" << cap;
            }
        }
    }
}

TEST(PhasePoly, AdditionLaws) {
    std::mt19937_64 rng(1);
    FieldCtx f(5);
    PhasePoly a = random_poly(f, 3, 3, rng);
    PhasePoly b = random_poly(f, 3, 2, rng);
    PhasePoly c = random_poly(f, 3, 1, rng);
    PhasePoly z(f, 3, 1);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a + z, a);
    EXPECT_TRUE((a + (-a)).is_zero());
}

TEST(PhasePoly, RestrictAndElemEval) {
    std::mt19937_64 rng(2);
    FieldCtx f(7);
    PhasePoly q = random_poly(f, 3, 3, rng);
    for (std::uint64_t v = 0; v < 7; ++v) {
        PhasePoly r = q.restrict(1, v);
        for (int k = 0; k < 10; ++k) {
            Vec x = random_point(3, 7, rng);
            Vec y = x;
            y[1] = v;
            EXPECT_EQ(r.eval(x), q.eval(y));
            EXPECT_EQ(r.coeff(Monomial::lin(1)), 0u);
        }
    }
    Vec x{1, 2, 3};
    std::vector<FieldElem> xe{FieldElem(f, 1), FieldElem(f, 2), FieldElem(f, 3)};
    EXPECT_EQ(q.eval(xe).value(), q.eval(x));
    EXPECT_THROW(q.eval(Vec{1, 2}), Error);
}

TEST(PhasePoly, ZeroCoefficientsArePruned) {
    FieldCtx f(5);
    PhasePoly q(f, 2, 2);
    q.add_term(Monomial::prod2(1, 0), 3);
    q.add_term(Monomial::prod2(0, 1), 2);
    EXPECT_TRUE(q.is_zero());
}

}  // namespace
}  // namespace qupit
