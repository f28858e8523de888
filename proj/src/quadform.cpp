/*
 * Copyright 2026 The cycloweight authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "cycloweight/quadform.hpp"

namespace cycloweight {

bool SymMatrix::is_symmetric() const {
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

GramBuilder::GramBuilder(const FieldCtx& ctx) : ctx_(&ctx), m_(ctx.m()) {
    const std::int64_t n = ctx.n();
    const std::int64_t fk = (ctx.d1_mod() - 1 + n) % n;   // p^k  mod n
    const std::int64_t f2k = (ctx.d2_mod() - 1 + n) % n;  // p^2k mod n
    u_.resize(size_t(m_) * m_);
    w_.resize(size_t(m_) * m_);
    z_.resize(size_t(m_) * m_);
    for (int i = 0; i < m_; ++i) {
        for (int j = 0; j < m_; ++j) {
            // v_t = pi^t
            Fq vi = ctx.pi_pow(i), vj = ctx.pi_pow(j);
            Fq u = ctx.add(ctx.mul(ctx.pi_pow(std::int64_t(i) * f2k % n), vj),
                           ctx.mul(vi, ctx.pi_pow(std::int64_t(j) * f2k % n)));
            Fq w = ctx.add(ctx.mul(ctx.pi_pow(std::int64_t(i) * fk % n), vj),
                           ctx.mul(vi, ctx.pi_pow(std::int64_t(j) * fk % n)));
            Fq z = ctx.pi_pow(i + j);
            u_[size_t(i) * m_ + j] = u.is_zero() ? -1 : u.log();
            w_[size_t(i) * m_ + j] = w.is_zero() ? -1 : w.log();
            z_[size_t(i) * m_ + j] = z.log();
        }
    }
}

void GramBuilder::build_into(std::span<int> out, Fq alpha, Fq beta, Fq gamma) const {
    const FieldCtx& ctx = *ctx_;
    const int p = ctx.p();
    const int half = ctx.half();
    const std::int64_t n = ctx.n();
    const auto& tr = ctx.trace_by_log();
    const std::int64_t la = alpha.is_zero() ? -1 : alpha.log();
    const std::int64_t lb = beta.is_zero() ? -1 : beta.log();
    const std::int64_t lg = gamma.is_zero() ? -1 : gamma.log();
    for (int i = 0; i < m_; ++i) {
        for (int j = i; j < m_; ++j) {
            const size_t idx = size_t(i) * m_ + j;
            int s = 0;
            if (la >= 0 && u_[idx] >= 0) {
                std::int64_t e = la + u_[idx];
                s += tr[size_t(e >= n ? e - n : e)];
            }
            if (lb >= 0 && w_[idx] >= 0) {
                std::int64_t e = lb + w_[idx];
                s += tr[size_t(e >= n ? e - n : e)];
            }
            int h = s * half % p;
            if (lg >= 0) {
                std::int64_t e = lg + z_[idx];
                h += tr[size_t(e >= n ? e - n : e)];
            }
            h %= p;
            out[idx] = h;
            out[size_t(j) * m_ + i] = h;
        }
    }
}

SymMatrix GramBuilder::build(Fq alpha, Fq beta, Fq gamma) const {
    SymMatrix h(m_);
    build_into(h.a, alpha, beta, gamma);
    return h;
}

SymMatrix gram_matrix(const FieldCtx& ctx, Fq alpha, Fq beta, Fq gamma) {
    return GramBuilder(ctx).build(alpha, beta, gamma);
}

namespace {

inline int mod_p(int v, int p) {
    v %= p;
    return v < 0 ? v + p : v;
}

int inv_mod(int a, int p) {
    int r = 1, b = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// Shared elimination core. When track != nullptr it accumulates the row
// operations into M (so M H M' is the final diagonal).
void diagonalize_core(std::vector<int>& w, int n, int p, std::vector<int>* track, DiagInfo& out) {
    auto at = [&](int i, int j) -> int& { return w[size_t(i) * n + j]; };

    auto swap_rc = [&](int i, int j) {
        for (int c = 0; c < n; ++c) std::swap(at(i, c), at(j, c));
        for (int r = 0; r < n; ++r) std::swap(at(r, i), at(r, j));
        if (track)
            for (int c = 0; c < n; ++c) std::swap((*track)[size_t(i) * n + c], (*track)[size_t(j) * n + c]);
    };
    // row_i += f * row_j and the mirrored column op
    auto addmul_rc = [&](int i, int j, int f) {
        for (int c = 0; c < n; ++c) at(i, c) = mod_p(at(i, c) + f * at(j, c), p);
        for (int r = 0; r < n; ++r) at(r, i) = mod_p(at(r, i) + f * at(r, j), p);
        if (track)
            for (int c = 0; c < n; ++c)
                (*track)[size_t(i) * n + c] =
                    mod_p((*track)[size_t(i) * n + c] + f * (*track)[size_t(j) * n + c], p);
    };

    int step = 0;
    while (step < n) {
        // lowest-index nonzero diagonal entry in the working block
        int piv = -1;
        for (int t = step; t < n; ++t)
            if (at(t, t) != 0) {
                piv = t;
                break;
            }
        if (piv < 0) {
            // all diagonal zero: find the lowest nonzero off-diagonal entry
            int a = -1, b = -1;
            for (int r = step; r < n && a < 0; ++r)
                for (int c = r + 1; c < n; ++c)
                    if (at(r, c) != 0) {
                        a = r;
                        b = c;
                        break;
                    }
            if (a < 0) break;  // block is zero: done
            addmul_rc(a, b, 1);  // creates 2*w[a][b] != 0 on the diagonal (p odd)
            piv = a;
        }
        if (piv != step) swap_rc(step, piv);
        const int d = at(step, step);
        const int dinv = inv_mod(d, p);
        for (int r = step + 1; r < n; ++r) {
            if (at(r, step) == 0) continue;
            addmul_rc(r, step, mod_p(-at(r, step) * dinv, p));
        }
        out.diag.push_back(d);
        ++step;
    }
    out.rank = int(out.diag.size());
    if (out.rank == 0) {
        out.disc_class = 0;
    } else {
        std::int64_t prod = 1;
        for (int d : out.diag) prod = prod * d % p;
        out.disc_class = legendre(prod, p);
    }
}

}  // namespace

DiagInfo diagonalize(const SymMatrix& h, int p) {
    DiagInfo out;
    std::vector<int> w = h.a;
    out.transform.assign(size_t(h.n) * h.n, 0);
    for (int i = 0; i < h.n; ++i) out.transform[size_t(i) * h.n + i] = 1;
    diagonalize_core(w, h.n, p, &out.transform, out);
    return out;
}

std::pair<int, int> rank_disc(const SymMatrix& h, int p) {
    DiagInfo out;
    std::vector<int> w = h.a;
    diagonalize_core(w, h.n, p, nullptr, out);
    return {out.rank, out.disc_class};
}

std::optional<std::pair<std::vector<int>, int>> solve_shift(const SymMatrix& h,
                                                            std::span<const int> a, int p) {
    const int n = h.n;
    // 2 Y H + A = 0  <=>  (2H) Y' = -A' since 2H is symmetric
    std::vector<int> aug(size_t(n) * (n + 1));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[size_t(i) * (n + 1) + j] = 2 * h.at(i, j) % p;
        aug[size_t(i) * (n + 1) + n] = mod_p(-a[size_t(i)], p);
    }
    auto at = [&](int i, int j) -> int& { return aug[size_t(i) * (n + 1) + j]; };

    std::vector<int> pivot_col(size_t(n), -1);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pr = -1;
        for (int r = row; r < n; ++r)
            if (at(r, col) != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        for (int j = 0; j <= n; ++j) std::swap(at(row, j), at(pr, j));
        const int inv = inv_mod(at(row, col), p);
        for (int j = col; j <= n; ++j) at(row, j) = at(row, j) * inv % p;
        for (int r = 0; r < n; ++r) {
            if (r == row || at(r, col) == 0) continue;
            const int f = at(r, col);
            for (int j = col; j <= n; ++j) at(r, j) = mod_p(at(r, j) - f * at(row, j), p);
        }
        pivot_col[size_t(row)] = col;
        ++row;
    }
    for (int r = row; r < n; ++r)
        if (at(r, n) != 0) return std::nullopt;

    std::vector<int> b(size_t(n), 0);
    for (int r = 0; r < row; ++r) b[size_t(pivot_col[size_t(r)])] = at(r, n);

    int t = 0;
    const int half = inv_mod(2, p);
    for (int i = 0; i < n; ++i) t = mod_p(t + a[size_t(i)] * b[size_t(i)], p);
    t = t * half % p;
    return std::make_pair(std::move(b), t);
}

}  // namespace cycloweight
