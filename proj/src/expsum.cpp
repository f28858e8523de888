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

#include "cycloweight/expsum.hpp"

#include <array>
#include <thread>

namespace cycloweight {

namespace {

constexpr int kMaxM = 16;  // p^m <= 2^20 keeps m <= 12

// Direct summation core: accumulate counts of Tr(alpha x^{d2} + beta x^{d1}
// + gamma x^2 [+ delta x]) over all x, then canonicalize once.
CycInt direct_sum(const FieldCtx& ctx, Fq alpha, Fq beta, Fq gamma, const Fq* delta) {
    const int p = ctx.p();
    const std::int64_t n = ctx.n();
    const auto& tr = ctx.trace_by_log();
    std::array<i128, 16> counts{};
    counts[0] += 1;  // x = 0 term: all exponents positive, Tr(0) = 0
    const std::int64_t la = alpha.is_zero() ? -1 : alpha.log();
    const std::int64_t lb = beta.is_zero() ? -1 : beta.log();
    const std::int64_t lg = gamma.is_zero() ? -1 : gamma.log();
    const std::int64_t ld = (delta == nullptr || delta->is_zero()) ? -1 : delta->log();
    std::int64_t e2 = 0, e1 = 0, eq = 0;  // t*d2, t*d1, 2t mod n
    for (std::int64_t t = 0; t < n; ++t) {
        int v = 0;
        if (la >= 0) {
            std::int64_t e = la + e2;
            v += tr[size_t(e >= n ? e - n : e)];
        }
        if (lb >= 0) {
            std::int64_t e = lb + e1;
            v += tr[size_t(e >= n ? e - n : e)];
        }
        if (lg >= 0) {
            std::int64_t e = lg + eq;
            v += tr[size_t(e >= n ? e - n : e)];
        }
        if (ld >= 0) {
            std::int64_t e = ld + t;
            v += tr[size_t(e >= n ? e - n : e)];
        }
        counts[size_t(v % p)] += 1;
        e2 += ctx.d2_mod();
        if (e2 >= n) e2 -= n;
        e1 += ctx.d1_mod();
        if (e1 >= n) e1 -= n;
        eq += 2;
        if (eq >= n) eq -= n;
    }
    return CycInt::from_counts(p, std::span<const i128>(counts.data(), size_t(p)));
}

}  // namespace

CycInt t_direct(const FieldCtx& ctx, Fq alpha, Fq beta, Fq gamma) {
    return direct_sum(ctx, alpha, beta, gamma, nullptr);
}

CycInt s_direct(const FieldCtx& ctx, Fq alpha, Fq beta, Fq gamma, Fq delta) {
    return direct_sum(ctx, alpha, beta, gamma, &delta);
}

ValueClass t_class(int rank, int disc, const CodeParams& params) {
    if (rank == 0) return ValueClass::full();
    const int i = params.m - rank;
    if (i < 0 || i > 4) throw InvariantError("rank outside [m-4, m] for a nonzero triple");
    // (p*)^{floor(r/2)} carries sign (-1)^{(p-1)/2 * floor(r/2)}
    int eps = disc;
    if (params.p % 4 == 3 && (rank / 2) % 2 == 1) eps = -eps;
    return rank % 2 == 0 ? ValueClass::plain(eps, i, 0) : ValueClass::gauss(eps, i, 0);
}

CycInt t_fast(const GramBuilder& gb, const Classifier& cls, Fq alpha, Fq beta, Fq gamma) {
    const CodeParams& params = cls.params();
    if (alpha.is_zero() && beta.is_zero() && gamma.is_zero())
        return cls.value_of(ValueClass::full());
    auto [rank, disc] = rank_disc(gb.build(alpha, beta, gamma), params.p);
    return cls.value_of(t_class(rank, disc, params));
}

CycInt s_fast(const GramBuilder& gb, const Classifier& cls, Fq alpha, Fq beta, Fq gamma,
              Fq delta) {
    const FieldCtx& ctx = gb.ctx();
    const CodeParams& params = cls.params();
    const int m = params.m;
    SymMatrix h = gb.build(alpha, beta, gamma);
    std::vector<int> a(static_cast<size_t>(m), 0);
    for (int t = 0; t < m; ++t) a[size_t(t)] = ctx.trace(ctx.mul(delta, ctx.pi_pow(t)));
    auto sol = solve_shift(h, a, params.p);
    if (!sol) return CycInt::zero(params.p);
    CycInt t_val = t_fast(gb, cls, alpha, beta, gamma);
    return t_val.mul(CycInt::zeta_pow(params.p, sol->second));
}

namespace {

// Stack-resident elimination on a fixed-size buffer; identical pivot rule to
// quadform's diagonalize but without transform tracking.
struct SmallDiag {
    int rank;
    int disc;
};

SmallDiag small_rank_disc(int* w, int m, int p) {
    auto at = [&](int i, int j) -> int& { return w[i * m + j]; };
    int rank = 0;
    std::int64_t dprod = 1;
    int step = 0;
    while (step < m) {
        int piv = -1;
        for (int t = step; t < m; ++t)
            if (at(t, t) != 0) {
                piv = t;
                break;
            }
        if (piv < 0) {
            int a = -1, b = -1;
            for (int r = step; r < m && a < 0; ++r)
                for (int c = r + 1; c < m; ++c)
                    if (at(r, c) != 0) {
                        a = r;
                        b = c;
                        break;
                    }
            if (a < 0) break;
            for (int c = 0; c < m; ++c) at(a, c) = (at(a, c) + at(b, c)) % p;
            for (int r = 0; r < m; ++r) at(r, a) = (at(r, a) + at(r, b)) % p;
            piv = a;
        }
        if (piv != step) {
            for (int c = 0; c < m; ++c) std::swap(at(step, c), at(piv, c));
            for (int r = 0; r < m; ++r) std::swap(at(r, step), at(r, piv));
        }
        const int d = at(step, step);
        int dinv = 1, bse = d, e = p - 2;
        while (e > 0) {
            if (e & 1) dinv = dinv * bse % p;
            bse = bse * bse % p;
            e >>= 1;
        }
        for (int r = step + 1; r < m; ++r) {
            const int f = at(r, step);
            if (f == 0) continue;
            const int g = (p - f) * dinv % p;
            for (int c = 0; c < m; ++c) at(r, c) = (at(r, c) + g * at(step, c)) % p;
            for (int rr = 0; rr < m; ++rr) at(rr, r) = (at(rr, r) + g * at(rr, step)) % p;
        }
        dprod = dprod * d % p;
        ++rank;
        ++step;
    }
    return {rank, rank == 0 ? 0 : legendre(dprod, p)};
}

// Row-reduce 2H (symmetric) to RREF, tracking E with E*(2H) = R. Returns the
// rank, the pivot columns, E, and the solve matrix P with B(A) = P A'
// (a valid solution of (2H) B' = -A' whenever the system is consistent).
struct ShiftSolver {
    int rank;
    // column-major P: pcol[c][i] = P[i][c]; and consistency rows ccol[c][l]
    int pcol[kMaxM][kMaxM];
    int ccol[kMaxM][kMaxM];
    int n_checks;
};

void build_shift_solver(const int* h, int m, int p, ShiftSolver& out) {
    int r_[kMaxM][kMaxM];   // working copy of 2H
    int e_[kMaxM][kMaxM];   // row-op accumulator
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            r_[i][j] = 2 * h[i * m + j] % p;
            e_[i][j] = i == j ? 1 : 0;
        }
    int pivot_col[kMaxM];
    int row = 0;
    for (int col = 0; col < m && row < m; ++col) {
        int pr = -1;
        for (int r = row; r < m; ++r)
            if (r_[r][col] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m; ++j) {
                std::swap(r_[row][j], r_[pr][j]);
                std::swap(e_[row][j], e_[pr][j]);
            }
        int inv = 1, b = r_[row][col], e = p - 2;
        while (e > 0) {
            if (e & 1) inv = inv * b % p;
            b = b * b % p;
            e >>= 1;
        }
        for (int j = 0; j < m; ++j) {
            r_[row][j] = r_[row][j] * inv % p;
            e_[row][j] = e_[row][j] * inv % p;
        }
        for (int r = 0; r < m; ++r) {
            if (r == row) continue;
            const int f = r_[r][col];
            if (f == 0) continue;
            const int g = p - f;
            for (int j = 0; j < m; ++j) {
                r_[r][j] = (r_[r][j] + g * r_[row][j]) % p;
                e_[r][j] = (e_[r][j] + g * e_[row][j]) % p;
            }
        }
        pivot_col[row] = col;
        ++row;
    }
    out.rank = row;
    out.n_checks = m - row;
    // P rows: P[pivot_col[l]][j] = -E[l][j]; other rows zero. Stored by column.
    for (int c = 0; c < m; ++c)
        for (int i = 0; i < m; ++i) out.pcol[c][i] = 0;
    for (int l = 0; l < row; ++l)
        for (int j = 0; j < m; ++j) out.pcol[j][pivot_col[l]] = (p - e_[l][j]) % p;
    for (int l = 0; l < out.n_checks; ++l)
        for (int j = 0; j < m; ++j) out.ccol[j][l] = e_[row + l][j];
}

// Modular base-p Gray walk: each step increments exactly one coordinate of
// the gray vector by 1 (mod p); the walk visits all p^m vectors exactly once
// starting from zero. The position comes from where the carry of an ordinary
// base-p counter stops.
struct GrayCounter {
    int counter[kMaxM];
    int gray[kMaxM];
    int m, p;
    std::int64_t remaining;

    void init(int m_, int p_, std::int64_t total) {
        m = m_;
        p = p_;
        remaining = total - 1;
        for (int i = 0; i < m; ++i) counter[i] = gray[i] = 0;
    }
    bool done() const { return remaining == 0; }
    int step() {
        --remaining;
        int c = 0;
        while (counter[c] == p - 1) {
            counter[c] = 0;
            ++c;
        }
        ++counter[c];
        if (++gray[c] == p) gray[c] = 0;
        return c;
    }
};

struct TripleWork {
    const FieldCtx* ctx;
    std::int64_t alpha_begin, alpha_end;
    ValueDistribution dist;
    bool with_delta = false;
    std::string error;  // set when a structural invariant fails mid-sweep
};

void sweep_worker(TripleWork& wk) {
    const FieldCtx& ctx = *wk.ctx;
    const CodeParams& params = ctx.params();
    const int p = params.p, m = params.m;
    const std::int64_t q = ctx.q();
    const GramBuilder gb(ctx);
    const int half = ctx.half();

    int gram[kMaxM * kMaxM];
    int work[kMaxM * kMaxM];
    ShiftSolver solver;
    // class counters indexed [eps01][i][j]; flushed into the map per worker
    i128 plain_gauss[2][5][16] = {};
    i128 zero_count = 0;
    i128 full_count = 0;

    for (std::int64_t ai = wk.alpha_begin; ai < wk.alpha_end; ++ai) {
        const Fq alpha = ctx.from_index(ai);
        for (std::int64_t bi = 0; bi < q; ++bi) {
            const Fq beta = ctx.from_index(bi);
            for (std::int64_t gi = 0; gi < q; ++gi) {
                if (ai == 0 && bi == 0 && gi == 0) {
                    if (wk.with_delta) {
                        full_count += 1;           // delta = 0
                        zero_count += q - 1;       // nontrivial linear character sums
                    } else {
                        full_count += 1;
                    }
                    continue;
                }
                const Fq gamma = ctx.from_index(gi);
                gb.build_into(std::span<int>(gram, size_t(m) * m), alpha, beta, gamma);

                for (int t = 0; t < m * m; ++t) work[t] = gram[t];
                const SmallDiag d = small_rank_disc(work, m, p);
                const int i = m - d.rank;
                if (i < 0 || i > 4) {
                    wk.error = "rank bound violated: a nonzero triple has rank < m - 4";
                    return;
                }
                int eps = d.disc;
                if (p % 4 == 3 && (d.rank / 2) % 2 == 1) eps = -eps;
                const int e01 = eps > 0 ? 0 : 1;

                if (!wk.with_delta) {
                    plain_gauss[e01][i][0] += 1;
                    continue;
                }

                build_shift_solver(gram, m, p, solver);
                if (solver.rank != d.rank) {
                    wk.error = "linear rank of 2H disagrees with congruence rank";
                    return;
                }

                // Walk A over F_p^m (A_delta is a bijection onto F_p^m, so
                // this is exactly the delta loop). Maintain B = P A' and the
                // consistency values C A' incrementally.
                GrayCounter gray;
                gray.init(m, p, q);
                int bvec[kMaxM] = {};
                int cons[kMaxM] = {};
                int cons_nonzero = 0;
                std::int64_t support = 1;  // A = 0 is consistent with t = 0
                plain_gauss[e01][i][0] += 1;
                while (!gray.done()) {
                    const int c = gray.step();
                    const int* pc = solver.pcol[c];
                    for (int t = 0; t < m; ++t) {
                        bvec[t] += pc[t];
                        if (bvec[t] >= p) bvec[t] -= p;
                    }
                    const int* cc = solver.ccol[c];
                    for (int l = 0; l < solver.n_checks; ++l) {
                        if (cons[l] != 0) --cons_nonzero;
                        cons[l] += cc[l];
                        if (cons[l] >= p) cons[l] -= p;
                        if (cons[l] != 0) ++cons_nonzero;
                    }
                    if (cons_nonzero != 0) {
                        zero_count += 1;
                        continue;
                    }
                    int t_val = 0;
                    for (int t = 0; t < m; ++t) t_val += gray.gray[t] * bvec[t];
                    t_val = t_val % p * half % p;
                    plain_gauss[e01][i][t_val] += 1;
                    ++support;
                }
                std::int64_t expect = 1;
                for (int t = 0; t < d.rank; ++t) expect *= p;
                if (support != expect) {
                    wk.error = "per-triple nonzero-S support != p^rank";
                    return;
                }
            }
        }
    }

    for (int e01 = 0; e01 < 2; ++e01)
        for (int i = 0; i <= 4; ++i)
            for (int j = 0; j < p; ++j) {
                if (plain_gauss[e01][i][j] == 0) continue;
                const int eps = e01 == 0 ? 1 : -1;
                const bool even = (m - i) % 2 == 0;
                wk.dist.add(even ? ValueClass::plain(eps, i, j) : ValueClass::gauss(eps, i, j),
                            plain_gauss[e01][i][j]);
            }
    if (zero_count != 0) wk.dist.add(ValueClass::zero(), zero_count);
    if (full_count != 0) wk.dist.add(ValueClass::full(), full_count);
}

template <bool WithDelta>
std::pair<ValueDistribution, std::pair<bool, bool>> run_sweep(const FieldCtx& ctx,
                                                              const SweepOptions& opt) {
    const std::int64_t q = ctx.q();
    const i128 states = checked_pow(q, 3);
    if (states > opt.budget)
        throw BudgetError(std::int64_t(states), opt.budget,
                          "sweep needs a budget of " + to_decimal(states) + " states, have " +
                              std::to_string(opt.budget));

    int jobs = opt.jobs < 1 ? 1 : opt.jobs;
    if (std::int64_t(jobs) > q) jobs = int(q);
    std::vector<TripleWork> work;
    work.resize(size_t(jobs));
    for (int w = 0; w < jobs; ++w) {
        work[size_t(w)].ctx = &ctx;
        work[size_t(w)].alpha_begin = q * w / jobs;
        work[size_t(w)].alpha_end = q * (w + 1) / jobs;
        work[size_t(w)].with_delta = WithDelta;
    }
    if (jobs == 1) {
        sweep_worker(work[0]);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(size_t(jobs));
        for (auto& wk : work) threads.emplace_back(sweep_worker, std::ref(wk));
        for (auto& t : threads) t.join();
    }
    ValueDistribution dist;
    for (auto& wk : work) {
        if (!wk.error.empty()) throw InvariantError(wk.error);
        dist.merge(wk.dist);
    }
    return {std::move(dist), {true, true}};
}

}  // namespace

TSweepResult t_distribution(const FieldCtx& ctx, const SweepOptions& opt) {
    auto [dist, flags] = run_sweep<false>(ctx, opt);
    const i128 expect = checked_pow(ctx.q(), 3);
    if (dist.total() != expect) throw InvariantError("T sweep total != p^3m");
    return {std::move(dist), flags.first};
}

SSweepResult s_distribution(const FieldCtx& ctx, const SweepOptions& opt) {
    auto [dist, flags] = run_sweep<true>(ctx, opt);
    const i128 expect = checked_pow(ctx.q(), 4);
    if (dist.total() != expect) throw InvariantError("S sweep total != p^4m");
    return {std::move(dist), flags.first, flags.second};
}

CycInt moment(const ValueDistribution& dist, int e, const CodeParams& params) {
    if (e != 2 && e != 4) throw std::domain_error("moment: e must be 2 or 4");
    const Classifier cls(params);
    CycInt acc = CycInt::zero(params.p);
    for (const auto& [c, k] : dist.counts)
        acc = acc.add(cls.value_of(c).pow(e).scalar_mul(k));
    if (!acc.is_rational())
        throw InvariantError("moment of a conjugation-closed distribution must be rational");
    return acc;
}

}  // namespace cycloweight
