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

#include "cycloweight/code.hpp"

#include <algorithm>

#include "cycloweight/rng.hpp"

namespace cycloweight {

namespace {

/// Minimal polynomial of pi^e as the product of (x - pi^{e p^j}) over the
/// p-cyclotomic coset of e. Coefficients must land in F_p.
std::vector<int> minimal_poly(const FieldCtx& ctx, std::int64_t e) {
    const std::int64_t n = ctx.n();
    e %= n;
    if (e < 0) e += n;

    std::vector<std::int64_t> coset;
    std::int64_t cur = e;
    do {
        coset.push_back(cur);
        cur = cur * ctx.p() % n;
    } while (cur != e);

    // poly over F_q in log representation; poly[i] is the coefficient of x^i
    std::vector<Fq> poly{Fq::from_log(0)};  // the constant 1
    for (std::int64_t s : coset) {
        const Fq root = ctx.pi_pow(s);
        std::vector<Fq> next(poly.size() + 1, Fq::zero());
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = ctx.add(next[i + 1], poly[i]);                      // x * poly
            next[i] = ctx.sub(next[i], ctx.mul(root, poly[i]));               // - root * poly
        }
        poly = std::move(next);
    }

    std::vector<int> out(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) {
        const std::int32_t packed = ctx.pack(poly[i]);
        if (packed >= ctx.p())
            throw InvariantError("minimal polynomial has a coefficient outside F_p");
        out[i] = packed;
    }
    return out;
}

std::vector<int> poly_mul_fp(const std::vector<int>& a, const std::vector<int>& b, int p) {
    std::vector<int> r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] = int((r[i + j] + std::int64_t(a[i]) * b[j]) % p);
    return r;
}

}  // namespace

CheckPolys min_check_polys(const FieldCtx& ctx) {
    const std::int64_t n = ctx.n();
    const int m = ctx.m();
    const std::int64_t exps[4] = {1, 2, ctx.d1_mod(), ctx.d2_mod()};

    CheckPolys cp;
    for (int i = 0; i < 4; ++i) {
        cp.h[size_t(i)] = minimal_poly(ctx, n - exps[i] % n);  // root pi^{-e}
        if (int(cp.h[size_t(i)].size()) != m + 1)
            throw InvariantError("check polynomial degree != m (parameters violate the standing assumptions)");
    }
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (cp.h[size_t(i)] == cp.h[size_t(j)])
                throw InvariantError("check polynomials collide (parameters violate the standing assumptions)");

    cp.product = cp.h[0];
    for (int i = 1; i < 4; ++i) cp.product = poly_mul_fp(cp.product, cp.h[size_t(i)], ctx.p());

    // h must divide x^{q-1} - 1: synthetic long division, remainder zero
    {
        const int p = ctx.p();
        std::vector<int> rem(size_t(n) + 1, 0);
        rem[size_t(n)] = 1;
        rem[0] = p - 1;
        const int deg = int(cp.product.size()) - 1;
        for (std::int64_t d = n; d >= deg; --d) {
            const int c = rem[size_t(d)];
            if (c == 0) continue;
            for (int i = 0; i <= deg; ++i) {
                int t = rem[size_t(d - deg + i)] - int(std::int64_t(c) * cp.product[size_t(i)] % p);
                rem[size_t(d - deg + i)] = t % p < 0 ? t % p + p : t % p;
            }
        }
        if (std::any_of(rem.begin(), rem.end(), [](int c) { return c != 0; }))
            throw InvariantError("h(x) does not divide x^{q-1} - 1");
    }
    return cp;
}

void for_each_coord(const FieldCtx& ctx, Fq alpha, Fq beta, Fq gamma, Fq delta,
                    const std::function<void(std::int64_t, int)>& fn) {
    const int p = ctx.p();
    const std::int64_t n = ctx.n();
    const auto& tr = ctx.trace_by_log();
    const std::int64_t la = alpha.is_zero() ? -1 : alpha.log();
    const std::int64_t lb = beta.is_zero() ? -1 : beta.log();
    const std::int64_t lg = gamma.is_zero() ? -1 : gamma.log();
    const std::int64_t ld = delta.is_zero() ? -1 : delta.log();
    std::int64_t e2 = 0, e1 = 0, eq = 0;
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
        fn(t, v % p);
        e2 += ctx.d2_mod();
        if (e2 >= n) e2 -= n;
        e1 += ctx.d1_mod();
        if (e1 >= n) e1 -= n;
        eq += 2;
        if (eq >= n) eq -= n;
    }
}

Codeword codeword(const FieldCtx& ctx, Fq alpha, Fq beta, Fq gamma, Fq delta) {
    Codeword c;
    c.tuple = {alpha, beta, gamma, delta};
    c.coords.resize(size_t(ctx.n()));
    for_each_coord(ctx, alpha, beta, gamma, delta,
                   [&](std::int64_t t, int v) { c.coords[size_t(t)] = v; });
    return c;
}

std::int64_t weight(const Codeword& c) {
    return std::count_if(c.coords.begin(), c.coords.end(), [](int v) { return v != 0; });
}

std::int64_t weight_direct(const FieldCtx& ctx, Fq alpha, Fq beta, Fq gamma, Fq delta) {
    std::int64_t w = 0;
    for_each_coord(ctx, alpha, beta, gamma, delta, [&](std::int64_t, int v) { w += v != 0; });
    return w;
}

std::int64_t weight_fast(const FieldCtx& ctx, Fq alpha, Fq beta, Fq gamma, Fq delta) {
    const CodeParams& params = ctx.params();
    const int p = params.p;
    const GramBuilder gb(ctx);
    const Classifier cls(params);
    CycInt r = CycInt::zero(p);
    for (int y = 1; y < p; ++y) {
        const Fq s = ctx.scalar(y);
        r = r.add(s_fast(gb, cls, ctx.mul(s, alpha), ctx.mul(s, beta), ctx.mul(s, gamma),
                         ctx.mul(s, delta)));
    }
    const i128 rv = r.rational();  // throws when R is not a rational integer
    const i128 w = checked_sub(checked_mul(p - 1, checked_pow(p, params.m - 1)),
                               exact_div(rv, p, "weight: R/p"));
    if (w < 0 || w > checked_sub(checked_pow(p, params.m), 1))
        throw InvariantError("weight outside [0, p^m - 1]");
    return std::int64_t(w);
}

std::int64_t weight_of_class(const ValueClass& c, const CodeParams& params) {
    const int p = params.p, m = params.m;
    auto P64 = [&](int e) {
        std::int64_t r = 1;
        while (e-- > 0) r *= p;
        return r;
    };
    const std::int64_t w0 = (p - 1) * P64(m - 1);
    switch (c.kind) {
        case SumKind::full:
            return 0;
        case SumKind::zero:
            return w0;
        case SumKind::plain:
            // R = eps (p-1) p^{(m+i)/2} at j = 0, else R = -eps p^{(m+i)/2}
            return c.j == 0 ? w0 - c.eps * (p - 1) * P64((m + c.i - 2) / 2)
                            : w0 + c.eps * P64((m + c.i - 2) / 2);
        case SumKind::gauss:
            // R = 0 at j = 0, else R = eps (-j/p) p^{(m+i+1)/2}
            return c.j == 0 ? w0 : w0 - c.eps * legendre(-c.j, p) * P64((m + c.i - 1) / 2);
    }
    throw std::logic_error("unreachable");
}

EnumeratorReport enumerator_check(const FieldCtx& ctx, std::int64_t sample_size,
                                  std::uint64_t seed, const SweepOptions& opt) {
    const CodeParams& params = ctx.params();
    const WeightDistribution expected = table3(params);

    EnumeratorReport rep;
    rep.min_distance = min_distance(expected);
    {
        auto it = expected.find(0);
        rep.injective = it != expected.end() && it->second == 1;
    }

    // sampled weights must land in the closed-form support
    rep.samples = sample_size;
    rep.sample_ok = true;
    SplitMix64 rng(seed);
    const std::uint64_t q = std::uint64_t(ctx.q());
    const GramBuilder gb(ctx);
    const Classifier cls(params);
    for (std::int64_t s = 0; s < sample_size; ++s) {
        const Fq a = ctx.from_index(std::int64_t(rng.below(q)));
        const Fq b = ctx.from_index(std::int64_t(rng.below(q)));
        const Fq g = ctx.from_index(std::int64_t(rng.below(q)));
        const Fq d = ctx.from_index(std::int64_t(rng.below(q)));
        CycInt r = CycInt::zero(params.p);
        for (int y = 1; y < params.p; ++y) {
            const Fq sc = ctx.scalar(y);
            r = r.add(s_fast(gb, cls, ctx.mul(sc, a), ctx.mul(sc, b), ctx.mul(sc, g),
                             ctx.mul(sc, d)));
        }
        const i128 w = checked_sub(checked_mul(params.p - 1, checked_pow(params.p, params.m - 1)),
                                   exact_div(r.rational(), params.p, "weight: R/p"));
        auto it = expected.find(std::int64_t(w));
        if (it == expected.end() || it->second == 0) {
            rep.sample_ok = false;
            ++rep.bad_samples;
        }
    }

    // exact mode: push the S distribution through the class -> weight map
    const i128 states = checked_pow(ctx.q(), 3);
    if (states <= opt.budget) {
        const SSweepResult sw = s_distribution(ctx, opt);
        WeightDistribution observed;
        for (const auto& [c, k] : sw.dist.counts) {
            const std::int64_t w = weight_of_class(c, params);
            auto [it, fresh] = observed.emplace(w, k);
            if (!fresh) it->second = checked_add(it->second, k);
        }
        rep.exact_ran = true;
        rep.exact_match = true;
        for (const auto& [w, f] : expected) {
            auto it = observed.find(w);
            const i128 got = it == observed.end() ? 0 : it->second;
            if (got != f) {
                rep.exact_match = false;
                rep.divergences.push_back({w, f, got});
            }
        }
        for (const auto& [w, f] : observed) {
            if (expected.find(w) == expected.end() && f != 0) {
                rep.exact_match = false;
                rep.divergences.push_back({w, 0, f});
            }
        }
        rep.observed = std::move(observed);
    }
    return rep;
}

}  // namespace cycloweight
