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

#include "cycloweight/counting.hpp"

#include <algorithm>

namespace cycloweight {

namespace {

// merge-walk two sorted RLE vectors: sum of cnt1 * cnt2 over equal keys
i128 dot(const std::vector<std::pair<std::uint64_t, std::int64_t>>& a,
         const std::vector<std::pair<std::uint64_t, std::int64_t>>& b) {
    i128 acc = 0;
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first) {
            ++i;
        } else if (a[i].first > b[j].first) {
            ++j;
        } else {
            acc = checked_add(acc, checked_mul(a[i].second, b[j].second));
            ++i;
            ++j;
        }
    }
    return acc;
}

}  // namespace

std::int64_t BucketGroup::at(std::int64_t b_index, std::int64_t c_index, std::int64_t q) const {
    const std::uint64_t key = std::uint64_t(b_index) * std::uint64_t(q) + std::uint64_t(c_index);
    auto it = std::lower_bound(entries.begin(), entries.end(), key,
                               [](const auto& e, std::uint64_t k) { return e.first < k; });
    return it != entries.end() && it->first == key ? it->second : 0;
}

PairBuckets::PairBuckets(const FieldCtx& ctx, std::int64_t budget) : ctx_(&ctx) {
    const std::int64_t q = ctx.q();
    const i128 pairs = checked_mul(q, q);
    if (pairs > budget)
        throw BudgetError(std::int64_t(pairs), budget,
                          "pair enumeration needs a budget of " + to_decimal(pairs) +
                              " states, have " + std::to_string(budget));

    const std::int64_t n = ctx.n();
    pow2_.assign(size_t(q), 0);
    powd1_.assign(size_t(q), 0);
    powd2_.assign(size_t(q), 0);
    for (std::int64_t t = 0; t < n; ++t) {
        pow2_[size_t(t) + 1] = std::int32_t(2 * t % n);
        powd1_[size_t(t) + 1] = std::int32_t(ctx.d1_mod() * t % n);
        powd2_[size_t(t) + 1] = std::int32_t(ctx.d2_mod() * t % n);
    }

    // n4 = sum over a of <group(a), negated group(-a)>; the a and -a terms
    // are equal, so stream over representatives {0} and {pi^t : t < n/2}.
    const BucketGroup g0 = group(0);
    n2_ = g0.at(0, 0, q);
    total_ = g0.total;
    {
        BucketGroup g0neg = g0;
        for (auto& e : g0neg.entries) {
            const std::int64_t b = std::int64_t(e.first / std::uint64_t(q));
            const std::int64_t c = std::int64_t(e.first % std::uint64_t(q));
            const std::int64_t nb = ctx.index_of(ctx.neg(ctx.from_index(b)));
            const std::int64_t nc = ctx.index_of(ctx.neg(ctx.from_index(c)));
            e.first = std::uint64_t(nb) * std::uint64_t(q) + std::uint64_t(nc);
        }
        std::sort(g0neg.entries.begin(), g0neg.entries.end());
        n4_ = dot(g0.entries, g0neg.entries);
    }
    for (std::int64_t t = 0; t < n / 2; ++t) {
        const BucketGroup gp = group(1 + t);
        BucketGroup gm = group(1 + (t + n / 2) % n);
        total_ = checked_add(total_, checked_add(gp.total, gm.total));
        for (auto& e : gm.entries) {
            const std::int64_t b = std::int64_t(e.first / std::uint64_t(q));
            const std::int64_t c = std::int64_t(e.first % std::uint64_t(q));
            const std::int64_t nb = ctx.index_of(ctx.neg(ctx.from_index(b)));
            const std::int64_t nc = ctx.index_of(ctx.neg(ctx.from_index(c)));
            e.first = std::uint64_t(nb) * std::uint64_t(q) + std::uint64_t(nc);
        }
        std::sort(gm.entries.begin(), gm.entries.end());
        n4_ = checked_add(n4_, checked_mul(2, dot(gp.entries, gm.entries)));
    }
    if (total_ != pairs) throw InvariantError("pair buckets do not partition F_q^2");
    if (n2_ < 1) throw InvariantError("bucket at the origin lost the zero pair");
}

BucketGroup PairBuckets::group(std::int64_t a_index) const {
    const FieldCtx& ctx = *ctx_;
    const std::int64_t q = ctx.q();
    const std::int64_t n = ctx.n();
    const Fq a = ctx.from_index(a_index);

    BucketGroup g;
    g.a_index = a_index;
    std::vector<std::uint64_t> keys;
    keys.reserve(size_t(2 * q));

    auto push_pair = [&](std::int64_t x1, std::int64_t x2) {
        // x1, x2 element indices; key from the two power sums
        const Fq b = ctx.add(x1 == 0 ? Fq::zero() : Fq::from_log(powd1_[size_t(x1)]),
                             x2 == 0 ? Fq::zero() : Fq::from_log(powd1_[size_t(x2)]));
        const Fq c = ctx.add(x1 == 0 ? Fq::zero() : Fq::from_log(powd2_[size_t(x1)]),
                             x2 == 0 ? Fq::zero() : Fq::from_log(powd2_[size_t(x2)]));
        keys.push_back(std::uint64_t(ctx.index_of(b)) * std::uint64_t(q) +
                       std::uint64_t(ctx.index_of(c)));
    };

    for (std::int64_t x1 = 0; x1 < q; ++x1) {
        // solve x2^2 = a - x1^2 in the log domain: pi^s is a square iff s is
        // even (q odd, so n = q-1 is even), with roots pi^{s/2} and
        // pi^{s/2 + n/2}
        const Fq x1sq = x1 == 0 ? Fq::zero() : Fq::from_log(pow2_[size_t(x1)]);
        const Fq rhs = ctx.sub(a, x1sq);
        if (rhs.is_zero()) {
            push_pair(x1, 0);
            continue;
        }
        const std::int64_t s = rhs.log();
        if (s % 2 != 0) continue;
        const std::int64_t r1 = s / 2, r2 = s / 2 + n / 2;
        push_pair(x1, 1 + r1);
        push_pair(x1, 1 + r2);
    }

    std::sort(keys.begin(), keys.end());
    for (size_t i = 0; i < keys.size();) {
        size_t j = i;
        while (j < keys.size() && keys[j] == keys[i]) ++j;
        g.entries.emplace_back(keys[i], std::int64_t(j - i));
        i = j;
    }
    g.total = std::int64_t(keys.size());
    return g;
}

std::int64_t PairBuckets::bucket(std::int64_t a_index, std::int64_t b_index,
                                 std::int64_t c_index) const {
    return group(a_index).at(b_index, c_index, ctx_->q());
}

N1bcReport n1bc_distribution(const PairBuckets& pb, int sign) {
    const FieldCtx& ctx = pb.ctx();
    if (ctx.p() % 4 != 3)
        throw std::domain_error("n1bc_distribution requires p = 3 (mod 4)");
    if (sign != 1 && sign != -1) throw std::domain_error("sign must be +1 or -1");

    const std::int64_t q = ctx.q();
    const Fq unit = sign == 1 ? ctx.scalar(1) : ctx.neg(ctx.scalar(1));
    const std::int64_t unit_idx = ctx.index_of(unit);
    const BucketGroup g = pb.group(unit_idx);

    N1bcReport rep;
    rep.c_unique_per_b = true;
    rep.no_axis_support = true;
    std::map<std::int64_t, std::int64_t> c_of_b;
    i128 nonzero_cells = 0;
    for (const auto& [key, cnt] : g.entries) {
        const std::int64_t b = std::int64_t(key / std::uint64_t(q));
        const std::int64_t c = std::int64_t(key % std::uint64_t(q));
        if (b == 0 || c == 0) {
            rep.no_axis_support = false;
            continue;
        }
        auto [it, fresh] = c_of_b.emplace(b, c);
        if (!fresh && it->second != c) rep.c_unique_per_b = false;
        rep.histogram[cnt] = checked_add(rep.histogram.count(cnt) ? rep.histogram[cnt] : 0, 1);
        nonzero_cells = checked_add(nonzero_cells, 1);
    }
    rep.at_unit = g.at(unit_idx, unit_idx, q);
    const i128 cells = checked_mul(q - 1, q - 1);
    rep.histogram[0] = checked_sub(cells, nonzero_cells);
    return rep;
}

}  // namespace cycloweight
