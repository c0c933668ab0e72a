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

#include "qupit/affine.h"

#include <string>
#include <utility>

#include "qupit/error.h"

namespace qupit {

namespace {

// Returns false if singular. On success `inv` holds the inverse. `m` is
// destroyed.
bool invert_in_place(const FieldCtx &f, std::size_t n, std::vector<std::uint64_t> &m,
                     std::vector<std::uint64_t> *inv) {
    std::vector<std::uint64_t> id;
    if (inv) {
        id.assign(n * n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            id[i * n + i] = 1;
        }
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv * n + col] == 0) {
            ++piv;
        }
        if (piv == n) {
            return false;
        }
        if (piv != col) {
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(m[piv * n + c], m[col * n + c]);
                if (inv) {
                    std::swap(id[piv * n + c], id[col * n + c]);
                }
            }
        }
        std::uint64_t s = f.inv(m[col * n + col]);
        for (std::size_t c = 0; c < n; ++c) {
            m[col * n + c] = f.mul(m[col * n + c], s);
            if (inv) {
                id[col * n + c] = f.mul(id[col * n + c], s);
            }
        }
        for (std::size_t r = 0; r < n; ++r) {
            std::uint64_t k = m[r * n + col];
            if (r == col || k == 0) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                m[r * n + c] = f.sub(m[r * n + c], f.mul(k, m[col * n + c]));
                if (inv) {
                    id[r * n + c] = f.sub(id[r * n + c], f.mul(k, id[col * n + c]));
                }
            }
        }
    }
    if (inv) {
        *inv = std::move(id);
    }
    return true;
}

void check_wire(std::size_t n, std::uint32_t w) {
    if (w >= n) {
        throw Error(ErrorKind::BadWires, "wire " + std::to_string(w) + " out of range for " +
                                             std::to_string(n) + " wires");
    }
}

}  // namespace

AffineMap::AffineMap(const FieldCtx &ctx, std::size_t n)
    : ctx_(ctx), n_(n), a_(n * n, 0), b_(n, 0) {
    for (std::size_t i = 0; i < n; ++i) {
        a_[i * n + i] = 1 % ctx.modulus();
    }
}

AffineMap::AffineMap(const FieldCtx &ctx, std::size_t n, std::vector<std::uint64_t> a,
                     std::vector<std::uint64_t> b)
    : ctx_(ctx), n_(n), a_(std::move(a)), b_(std::move(b)) {
    if (a_.size() != n * n || b_.size() != n) {
        throw Error(ErrorKind::DimensionMismatch, "affine map needs an n x n matrix and n offsets");
    }
    for (auto &v : a_) {
        v = ctx_.reduce_unsigned(v);
    }
    for (auto &v : b_) {
        v = ctx_.reduce_unsigned(v);
    }
    std::vector<std::uint64_t> scratch = a_;
    if (!invert_in_place(ctx_, n_, scratch, nullptr)) {
        throw Error(ErrorKind::BadParameter, "matrix is singular over F_" +
                                                 std::to_string(ctx_.modulus()));
    }
}

AffineMap AffineMap::identity(const FieldCtx &ctx, std::size_t n) {
    return AffineMap(ctx, n);
}

AffineMap AffineMap::from_generator(const FieldCtx &ctx, std::size_t n, const AffineGate &gate) {
    AffineMap g(ctx, n);
    check_wire(n, gate.a);
    if (gate.kind == AffineKind::CX || gate.kind == AffineKind::SWAP) {
        check_wire(n, gate.b);
        if (gate.a == gate.b) {
            throw Error(ErrorKind::BadWires, "two-wire gate needs distinct wires");
        }
    }
    if (gate.kind == AffineKind::M && ctx.reduce_unsigned(gate.arg) == 0) {
        throw Error(ErrorKind::BadParameter, "M needs a nonzero scale");
    }
    g.post_apply(gate);
    return g;
}

bool AffineMap::is_identity() const noexcept {
    for (std::size_t i = 0; i < n_; ++i) {
        if (b_[i] != 0) {
            return false;
        }
    }
    return is_linear() && [&] {
        for (std::size_t r = 0; r < n_; ++r) {
            for (std::size_t c = 0; c < n_; ++c) {
                if (a_[r * n_ + c] != (r == c ? 1u : 0u)) {
                    return false;
                }
            }
        }
        return true;
    }();
}

bool AffineMap::is_linear() const noexcept {
    for (auto v : b_) {
        if (v != 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint64_t> AffineMap::apply(const std::vector<std::uint64_t> &x) const {
    if (x.size() != n_) {
        throw Error(ErrorKind::DimensionMismatch, "point has " + std::to_string(x.size()) +
                                                      " coordinates, expected " +
                                                      std::to_string(n_));
    }
    std::vector<std::uint64_t> y(b_);
    for (std::size_t r = 0; r < n_; ++r) {
        for (std::size_t c = 0; c < n_; ++c) {
            y[r] = ctx_.add(y[r], ctx_.mul(a_[r * n_ + c], ctx_.reduce_unsigned(x[c])));
        }
    }
    return y;
}

AffineMap AffineMap::inverse() const {
    std::vector<std::uint64_t> m = a_;
    std::vector<std::uint64_t> inv;
    invert_in_place(ctx_, n_, m, &inv);
    AffineMap g(ctx_, n_);
    g.a_ = std::move(inv);
    // x = A^-1 (y - b)
    for (std::size_t r = 0; r < n_; ++r) {
        std::uint64_t acc = 0;
        for (std::size_t c = 0; c < n_; ++c) {
            acc = ctx_.add(acc, ctx_.mul(g.a_[r * n_ + c], b_[c]));
        }
        g.b_[r] = ctx_.neg(acc);
    }
    return g;
}

void AffineMap::shear(std::size_t src, std::size_t dst, std::uint64_t k) {
    k = ctx_.reduce_unsigned(k);
    if (k == 0) {
        return;
    }
    std::uint64_t *rd = &a_[dst * n_];
    const std::uint64_t *rs = &a_[src * n_];
    for (std::size_t c = 0; c < n_; ++c) {
        if (rs[c] != 0) {
            rd[c] = ctx_.add(rd[c], ctx_.mul(k, rs[c]));
        }
    }
    b_[dst] = ctx_.add(b_[dst], ctx_.mul(k, b_[src]));
}

void AffineMap::scale(std::size_t i, std::uint64_t k) {
    k = ctx_.reduce_unsigned(k);
    for (std::size_t c = 0; c < n_; ++c) {
        a_[i * n_ + c] = ctx_.mul(a_[i * n_ + c], k);
    }
    b_[i] = ctx_.mul(b_[i], k);
}

void AffineMap::translate(std::size_t i, std::uint64_t k) {
    b_[i] = ctx_.add(b_[i], ctx_.reduce_unsigned(k));
}

void AffineMap::swap(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n_; ++c) {
        std::swap(a_[i * n_ + c], a_[j * n_ + c]);
    }
    std::swap(b_[i], b_[j]);
}

void AffineMap::post_apply(const AffineGate &gate) {
    switch (gate.kind) {
        case AffineKind::X:
            translate(gate.a, gate.arg);
            break;
        case AffineKind::M:
            scale(gate.a, gate.arg);
            break;
        case AffineKind::CX:
            shear(gate.a, gate.b, gate.arg);
            break;
        case AffineKind::SWAP:
            swap(gate.a, gate.b);
            break;
    }
}

AffineMap compose(const AffineMap &g2, const AffineMap &g1) {
    if (!(g2.ctx() == g1.ctx()) || g2.n() != g1.n()) {
        throw Error(ErrorKind::DimensionMismatch, "cannot compose affine maps of different shape");
    }
    const FieldCtx &f = g1.ctx();
    std::size_t n = g1.n();
    std::vector<std::uint64_t> a(n * n, 0);
    std::vector<std::uint64_t> b(g2.translation());
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t k = 0; k < n; ++k) {
            std::uint64_t x = g2.a(r, k);
            if (x == 0) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                a[r * n + c] = f.add(a[r * n + c], f.mul(x, g1.a(k, c)));
            }
            b[r] = f.add(b[r], f.mul(x, g1.b(k)));
        }
    }
    return AffineMap(f, n, std::move(a), std::move(b));
}

AffineMap block_sum(const AffineMap &g1, const AffineMap &g2) {
    if (!(g1.ctx() == g2.ctx())) {
        throw Error(ErrorKind::ModulusMismatch, "block sum across moduli");
    }
    std::size_t n1 = g1.n();
    std::size_t n = n1 + g2.n();
    std::vector<std::uint64_t> a(n * n, 0);
    std::vector<std::uint64_t> b(n, 0);
    for (std::size_t r = 0; r < n1; ++r) {
        for (std::size_t c = 0; c < n1; ++c) {
            a[r * n + c] = g1.a(r, c);
        }
        b[r] = g1.b(r);
    }
    for (std::size_t r = 0; r < g2.n(); ++r) {
        for (std::size_t c = 0; c < g2.n(); ++c) {
            a[(n1 + r) * n + n1 + c] = g2.a(r, c);
        }
        b[n1 + r] = g2.b(r);
    }
    return AffineMap(g1.ctx(), n, std::move(a), std::move(b));
}

std::vector<AffineGate> synthesize(const AffineMap &g) {
    const FieldCtx &f = g.ctx();
    const std::uint64_t d = f.modulus();
    const std::size_t n = g.n();
    std::vector<std::uint64_t> m = g.matrix();
    // Row operations E_1, E_2, ... in the order performed, each already
    // replaced by its inverse.
    std::vector<AffineGate> undo;
    auto row_add = [&](std::size_t src, std::size_t dst, std::uint64_t k) {
        for (std::size_t c = 0; c < n; ++c) {
            m[dst * n + c] = f.add(m[dst * n + c], f.mul(k, m[src * n + c]));
        }
    };
    for (std::size_t j = 0; j < n; ++j) {
        if (m[j * n + j] == 0) {
            std::size_t i = j + 1;
            while (m[i * n + j] == 0) {
                ++i;
            }
            for (std::size_t c = 0; c < n; ++c) {
                std::swap(m[i * n + c], m[j * n + c]);
            }
            undo.push_back({AffineKind::SWAP, static_cast<std::uint32_t>(j),
                            static_cast<std::uint32_t>(i), 1});
        }
        std::uint64_t p = m[j * n + j];
        if (p != 1) {
            std::uint64_t s = f.inv(p);
            for (std::size_t c = 0; c < n; ++c) {
                m[j * n + c] = f.mul(m[j * n + c], s);
            }
            undo.push_back({AffineKind::M, static_cast<std::uint32_t>(j), 0, p});
        }
        auto clear = [&](std::size_t r) {
            std::uint64_t c = m[r * n + j];
            if (c == 0) {
                return;
            }
            row_add(j, r, d - c);
            undo.push_back(
                {AffineKind::CX, static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(r), c});
        };
        for (std::size_t r = j + 1; r < n; ++r) {
            clear(r);
        }
        for (std::size_t r = 0; r < j; ++r) {
            clear(r);
        }
    }
    std::vector<AffineGate> out(undo.rbegin(), undo.rend());
    for (std::size_t i = 0; i < n; ++i) {
        if (g.b(i) != 0) {
            out.push_back({AffineKind::X, static_cast<std::uint32_t>(i), 0, g.b(i)});
        }
    }
    return out;
}

}  // namespace qupit
