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

#pragma once

#include <cstdint>
#include <map>

#include "cycloweight/cyclo.hpp"
#include "cycloweight/field.hpp"
#include "cycloweight/quadform.hpp"

namespace cycloweight {

/// Exact multiset of classified exponential-sum values.
struct ValueDistribution {
    std::map<ValueClass, i128> counts;

    void add(const ValueClass& c, i128 k) {
        auto [it, fresh] = counts.emplace(c, k);
        if (!fresh) it->second = checked_add(it->second, k);
    }
    void merge(const ValueDistribution& o) {
        for (const auto& [c, k] : o.counts) add(c, k);
    }
    i128 total() const {
        i128 t = 0;
        for (const auto& [c, k] : counts) t = checked_add(t, k);
        return t;
    }
    i128 at(const ValueClass& c) const {
        auto it = counts.find(c);
        return it == counts.end() ? 0 : it->second;
    }

    friend bool operator==(const ValueDistribution&, const ValueDistribution&) = default;
};

struct SweepOptions {
    std::int64_t budget = 100'000'000;  // max enumerated states
    int jobs = 1;
};

// --- single sums ------------------------------------------------------------

/// T(alpha, beta, gamma) by direct summation over all q field elements,
/// bucketing Tr values into p integer counters.
CycInt t_direct(const FieldCtx& ctx, Fq alpha, Fq beta, Fq gamma);

/// S(alpha, beta, gamma, delta) by direct summation.
CycInt s_direct(const FieldCtx& ctx, Fq alpha, Fq beta, Fq gamma, Fq delta);

/// T via the quadratic-form evaluation: disc * (p*)^{r/2} * p^{m-r}, where an
/// odd r contributes one Gauss-sum factor. The zero form gives p^m.
CycInt t_fast(const GramBuilder& gb, const Classifier& cls, Fq alpha, Fq beta, Fq gamma);

/// S via the shift reduction: 0 when 2YH + A_delta = 0 is inconsistent, else
/// zeta^t * T with t from solve_shift.
CycInt s_fast(const GramBuilder& gb, const Classifier& cls, Fq alpha, Fq beta, Fq gamma,
              Fq delta);

/// The symbolic class of T for a form of the given rank and discriminant
/// class (rank 0 meaning the zero form -> full).
ValueClass t_class(int rank, int disc, const CodeParams& params);

// --- full sweeps ------------------------------------------------------------

struct TSweepResult {
    ValueDistribution dist;       // over all p^{3m} triples
    bool rank_bound_ok = false;   // rank >= m-4 held on every nonzero triple
};

/// Classifies T over all (alpha, beta, gamma) via Gram diagonalization.
/// Partitioned over alpha; the merged result is independent of jobs.
TSweepResult t_distribution(const FieldCtx& ctx, const SweepOptions& opt = {});

struct SSweepResult {
    ValueDistribution dist;       // over all p^{4m} tuples
    bool rank_bound_ok = false;
    bool support_ok = false;      // #{delta : S != 0} == p^rank for every triple
};

/// Classifies S over all p^{4m} tuples. Per triple the Gram matrix is
/// diagonalized once and the shift system preprocessed once; the delta loop
/// then walks the p^m shift vectors in Gray-code order at O(m) per step.
SSweepResult s_distribution(const FieldCtx& ctx, const SweepOptions& opt = {});

/// Exact e-th moment (e in {2, 4}) of a T-distribution, computed in
/// cyclotomic arithmetic. The result must be a rational integer.
CycInt moment(const ValueDistribution& dist, int e, const CodeParams& params);

}  // namespace cycloweight
