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

#include "cycloweight/closedform.hpp"

namespace cycloweight {

namespace {

i128 nonneg(i128 v, const char* what) {
    if (v < 0) throw InvariantError(std::string(what) + ": negative frequency");
    return v;
}

}  // namespace

RankCounts rank_counts(const CodeParams& params) {
    const int p = params.p, m = params.m;
    auto P = [&](int e) { return checked_pow(p, e); };

    // the common degree-2m factor of the rank-(m-1) counts
    const i128 K = checked_sub(
        checked_add(checked_sub(checked_sub(P(2 * m), P(2 * m - 2)), P(2 * m - 3)),
                    checked_add(P(m - 2), P(m - 3))),
        1);
    const i128 p2m1 = checked_sub(P(2), 1);  // p^2 - 1

    RankCounts rc;
    rc.n[1] = nonneg(exact_div(checked_mul(P(m + 1), K), p2m1, "n1"), "n1");
    rc.n[3] = nonneg(exact_div(checked_mul(P(m - 3), checked_mul(checked_sub(P(m - 1), 1),
                                                                 checked_sub(P(m), 1))),
                               p2m1, "n3"),
                     "n3");

    rc.split[0][1] = nonneg(exact_div(checked_mul(checked_add(P(m + 1), P((m + 3) / 2)), K),
                                      checked_mul(2, p2m1), "n_{1,1}"),
                            "n_{1,1}");
    rc.split[1][1] = nonneg(exact_div(checked_mul(checked_sub(P(m + 1), P((m + 3) / 2)), K),
                                      checked_mul(2, p2m1), "n_{-1,1}"),
                            "n_{-1,1}");
    const i128 f13 = checked_mul(checked_sub(P(m - 1), 1), checked_sub(P(m), 1));
    rc.split[0][3] = nonneg(exact_div(checked_mul(checked_add(P(m - 3), P((m - 3) / 2)), f13),
                                      checked_mul(2, p2m1), "n_{1,3}"),
                            "n_{1,3}");
    rc.split[1][3] = nonneg(exact_div(checked_mul(checked_sub(P(m - 3), P((m - 3) / 2)), f13),
                                      checked_mul(2, p2m1), "n_{-1,3}"),
                            "n_{-1,3}");
    if (checked_add(rc.split[0][1], rc.split[1][1]) != rc.n[1])
        throw InvariantError("n_{1,1} + n_{-1,1} != n1");
    if (checked_add(rc.split[0][3], rc.split[1][3]) != rc.n[3])
        throw InvariantError("n_{1,3} + n_{-1,3} != n3");

    // i = 0, 2, 4: the solved expressions; n_{eps,i} = n_i / 2
    const i128 n12 = nonneg(
        exact_div(checked_mul(checked_mul(P(2), checked_sub(P(m - 1), 1)), K),
                  checked_mul(2, checked_mul(p2m1, p2m1)), "n_{1,2}"),
        "n_{1,2}");
    const i128 n14 = nonneg(
        exact_div(checked_mul(checked_mul(checked_sub(P(m), 1), checked_sub(P(m - 1), 1)),
                              checked_sub(P(m - 3), 1)),
                  checked_mul(2, checked_mul(p2m1, checked_sub(P(4), 1))), "n_{1,4}"),
        "n_{1,4}");
    const i128 half_total = exact_div(
        checked_mul(checked_sub(P(m), 1),
                    checked_add(checked_sub(checked_add(checked_sub(P(2 * m), P(2 * m - 1)),
                                                        checked_add(P(2 * m - 4), P(m))),
                                            checked_add(P(m - 1), P(m - 3))),
                                1)),
        2, "n_{1,0} prefactor");
    const i128 n10 = nonneg(checked_sub(checked_sub(half_total, n12), n14), "n_{1,0}");
    rc.split[0][0] = rc.split[1][0] = n10;
    rc.split[0][2] = rc.split[1][2] = n12;
    rc.split[0][4] = rc.split[1][4] = n14;
    rc.n[0] = checked_mul(2, n10);
    rc.n[2] = checked_mul(2, n12);
    rc.n[4] = checked_mul(2, n14);

    // the five rank classes partition the nonzero triples
    i128 sum = 0;
    for (int i = 0; i <= 4; ++i) sum = checked_add(sum, rc.n[i]);
    if (sum != checked_sub(P(3 * m), 1))
        throw InvariantError("rank counts do not partition p^3m - 1 triples");
    return rc;
}

SplitCounts split_counts(const CodeParams& params) {
    const int p = params.p, m = params.m;
    auto P = [&](int e) { return checked_pow(p, e); };
    const RankCounts rc = rank_counts(params);

    SplitCounts sc;
    for (int e01 = 0; e01 < 2; ++e01) {
        const int eps = e01 == 0 ? 1 : -1;
        for (int i = 0; i <= 4; ++i) {
            const i128 base = rc.split[e01][i];
            if ((m - i) % 2 == 0) {
                // n_{eps,i,0} = (p^{m-i-1} + eps (p-1) p^{(m-i-2)/2}) n_{eps,i}
                const i128 j0 = checked_add(P(m - i - 1),
                                            i128(eps) * checked_mul(p - 1, P((m - i - 2) / 2)));
                const i128 jn = checked_sub(P(m - i - 1), i128(eps) * P((m - i - 2) / 2));
                sc.n[e01][i][0] = nonneg(checked_mul(j0, base), "n_{eps,i,0}");
                for (int j = 1; j < p; ++j)
                    sc.n[e01][i][j] = nonneg(checked_mul(jn, base), "n_{eps,i,j}");
            } else {
                // n_{eps,i,0} = p^{m-i-1} n_{eps,i}
                sc.n[e01][i][0] = nonneg(checked_mul(P(m - i - 1), base), "n_{eps,i,0}");
                for (int j = 1; j < p; ++j) {
                    const i128 f = checked_add(
                        P(m - i - 1), i128(eps) * i128(legendre(-j, p)) * P((m - i - 1) / 2));
                    sc.n[e01][i][j] = nonneg(checked_mul(f, base), "n_{eps,i,j}");
                }
            }
        }
    }

    // omega = p^m - 1 + sum_i (p^m - p^{m-i}) n_i
    i128 omega = checked_sub(P(m), 1);
    for (int i = 1; i <= 4; ++i)
        omega = checked_add(omega, checked_mul(checked_sub(P(m), P(m - i)), rc.n[i]));
    sc.omega = omega;

    // partition of the p^4m tuples
    i128 sum = checked_add(sc.omega, 1);
    for (int e01 = 0; e01 < 2; ++e01)
        for (int i = 0; i <= 4; ++i)
            for (int j = 0; j < p; ++j) sum = checked_add(sum, sc.n[e01][i][j]);
    if (sum != P(4 * m)) throw InvariantError("split counts do not partition p^4m tuples");
    return sc;
}

ValueDistribution table1(const CodeParams& params) {
    const int m = params.m;
    const RankCounts rc = rank_counts(params);
    ValueDistribution d;
    for (int e01 = 0; e01 < 2; ++e01) {
        const int eps = e01 == 0 ? 1 : -1;
        for (int i = 0; i <= 4; ++i) {
            if (rc.split[e01][i] == 0) continue;
            const bool even = (m - i) % 2 == 0;
            d.add(even ? ValueClass::plain(eps, i, 0) : ValueClass::gauss(eps, i, 0),
                  rc.split[e01][i]);
        }
    }
    d.add(ValueClass::full(), 1);
    if (d.total() != checked_pow(params.p, 3 * m)) throw InvariantError("table1 total != p^3m");
    return d;
}

ValueDistribution table2(const CodeParams& params) {
    const int p = params.p, m = params.m;
    const SplitCounts sc = split_counts(params);
    ValueDistribution d;
    for (int e01 = 0; e01 < 2; ++e01) {
        const int eps = e01 == 0 ? 1 : -1;
        for (int i = 0; i <= 4; ++i) {
            const bool even = (m - i) % 2 == 0;
            for (int j = 0; j < p; ++j) {
                if (sc.n[e01][i][j] == 0) continue;
                d.add(even ? ValueClass::plain(eps, i, j) : ValueClass::gauss(eps, i, j),
                      sc.n[e01][i][j]);
            }
        }
    }
    d.add(ValueClass::zero(), sc.omega);
    d.add(ValueClass::full(), 1);
    if (d.total() != checked_pow(params.p, 4 * m)) throw InvariantError("table2 total != p^4m");
    return d;
}

WeightDistribution table3(const CodeParams& params) {
    const int p = params.p, m = params.m;
    auto P64 = [&](int e) {
        std::int64_t r = 1;
        while (e-- > 0) r *= p;
        return r;
    };
    const SplitCounts sc = split_counts(params);
    const int leg_m1 = legendre(-1, p);

    const std::int64_t w0 = (p - 1) * P64(m - 1);
    const std::int64_t s1 = P64((m - 1) / 2);  // p^{(m-1)/2}
    const std::int64_t s3 = P64((m + 1) / 2);
    const std::int64_t s5 = P64((m + 3) / 2);

    auto sgn = [&](int eps) { return eps > 0 ? 0 : 1; };

    WeightDistribution wd;
    auto put = [&](std::int64_t w, i128 f) {
        auto [it, fresh] = wd.emplace(w, f);
        if (!fresh) it->second = checked_add(it->second, f);
    };

    put(0, 1);
    // weight (p-1)p^{m-1}: zeros of S plus the j = 0 Gauss classes
    put(w0, checked_add(sc.omega,
                        checked_mul(2, checked_add(sc.n[0][0][0],
                                                   checked_add(sc.n[0][2][0], sc.n[0][4][0])))));
    // +- p^{(m-1)/2}
    put(w0 - s1, checked_mul(p - 1, checked_add(sc.n[sgn(leg_m1)][0][1], sc.n[1][1][1])));
    put(w0 + s1, checked_mul(p - 1, checked_add(sc.n[sgn(-leg_m1)][0][1], sc.n[0][1][1])));
    // +- (p-1) p^{(m-1)/2}
    put(w0 - (p - 1) * s1, sc.n[0][1][0]);
    put(w0 + (p - 1) * s1, sc.n[1][1][0]);
    // +- p^{(m+1)/2}
    put(w0 - s3, checked_mul(p - 1, checked_add(sc.n[sgn(leg_m1)][2][1], sc.n[1][3][1])));
    put(w0 + s3, checked_mul(p - 1, checked_add(sc.n[sgn(-leg_m1)][2][1], sc.n[0][3][1])));
    // +- (p-1) p^{(m+1)/2}
    put(w0 - (p - 1) * s3, sc.n[0][3][0]);
    put(w0 + (p - 1) * s3, sc.n[1][3][0]);
    // +- p^{(m+3)/2}; the mirrored row reads p^{(m+3)/2} as well (the printed
    // table repeats the smaller shift there, which its own example rules out)
    put(w0 - s5, checked_mul(p - 1, sc.n[sgn(leg_m1)][4][1]));
    put(w0 + s5, checked_mul(p - 1, sc.n[sgn(-leg_m1)][4][1]));

    // checks: frequencies partition the code, nonzero weights stay in range,
    // and the balanced-coordinate identity   sum w * freq = (q-1)(p-1)p^{4m-1}
    i128 total = 0, mean = 0;
    for (const auto& [w, f] : wd) {
        nonneg(f, "table3 frequency");
        if (f > 0 && (w < 0 || w > P64(m) - 1))
            throw InvariantError("table3: nonzero frequency at an out-of-range weight");
        total = checked_add(total, f);
        mean = checked_add(mean, checked_mul(w, f));
    }
    if (total != checked_pow(p, 4 * m)) throw InvariantError("table3 total != p^4m");
    const i128 expected_mean =
        checked_mul(checked_sub(checked_pow(p, m), 1),
                    checked_mul(p - 1, checked_pow(p, 4 * m - 1)));
    if (mean != expected_mean) throw InvariantError("table3 weight mean identity failed");
    return wd;
}

std::int64_t min_distance(const WeightDistribution& wd) {
    for (const auto& [w, f] : wd)
        if (w > 0 && f > 0) return w;
    throw InvariantError("weight distribution has no nonzero weight");
}

std::pair<CycInt, CycInt> moment_closed_forms(const CodeParams& params) {
    const int p = params.p, m = params.m;
    auto P = [&](int e) { return checked_pow(p, e); };
    i128 m2, m4;
    if (p % 4 == 1) {
        const i128 tq = checked_sub(checked_mul(2, P(m)), 1);  // 2p^m - 1
        m2 = checked_mul(P(3 * m), tq);
        m4 = checked_mul(
            P(3 * m),
            checked_add(checked_mul(tq, tq),
                        checked_mul(checked_mul(p - 1, checked_sub(P(m), 1)),
                                    checked_sub(checked_mul(2, P(m)), p + 1))));
    } else {
        m2 = P(3 * m);
        m4 = checked_mul(
            P(3 * m),
            checked_add(1, checked_mul(checked_mul(p + 1, checked_sub(P(m), 1)),
                                       checked_add(checked_sub(checked_mul(2, P(m)), p), 1))));
    }
    return {CycInt::integer(p, m2), CycInt::integer(p, m4)};
}

}  // namespace cycloweight
