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

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "cycloweight/closedform.hpp"
#include "cycloweight/expsum.hpp"
#include "cycloweight/field.hpp"

namespace cycloweight {

/// The four degree-m check polynomials (minimal polynomials of pi^{-1},
/// pi^{-2}, pi^{-(p^k+1)}, pi^{-(p^2k+1)}) and their degree-4m product.
/// Coefficients over F_p, constant term first, monic.
struct CheckPolys {
    std::array<std::vector<int>, 4> h;
    std::vector<int> product;
};

CheckPolys min_check_polys(const FieldCtx& ctx);

/// Codeword of the length p^m - 1 code attached to a tuple: coordinate t is
/// Tr(alpha pi^{d2 t} + beta pi^{d1 t} + gamma pi^{2t} + delta pi^t).
struct Codeword {
    std::array<Fq, 4> tuple;          // (alpha, beta, gamma, delta)
    std::vector<int> coords;          // length p^m - 1
};

Codeword codeword(const FieldCtx& ctx, Fq alpha, Fq beta, Fq gamma, Fq delta);

/// Stream the coordinates without materializing the word.
void for_each_coord(const FieldCtx& ctx, Fq alpha, Fq beta, Fq gamma, Fq delta,
                    const std::function<void(std::int64_t t, int value)>& fn);

/// Hamming weight by streaming the p^m - 1 coordinates.
std::int64_t weight_direct(const FieldCtx& ctx, Fq alpha, Fq beta, Fq gamma, Fq delta);
std::int64_t weight(const Codeword& c);

/// Hamming weight from R = sum over y in F_p^* of S(y alpha, ..., y delta):
/// W = (p-1) p^{m-1} - R / p. R must come out a rational integer divisible
/// by p; anything else raises InvariantError.
std::int64_t weight_fast(const FieldCtx& ctx, Fq alpha, Fq beta, Fq gamma, Fq delta);

/// Weight of a codeword whose S value lies in a given class, from the case
/// analysis of the weight formula.
std::int64_t weight_of_class(const ValueClass& c, const CodeParams& params);

struct WeightDivergence {
    std::int64_t weight;
    i128 expected;  // closed form
    i128 observed;  // sweep
};

struct EnumeratorReport {
    bool exact_ran = false;           // full S-sweep comparison performed
    bool exact_match = false;
    std::vector<WeightDivergence> divergences;
    bool sample_ok = false;           // all sampled weights in the closed-form support
    std::int64_t samples = 0;
    std::int64_t bad_samples = 0;
    std::int64_t min_distance = 0;    // of the closed-form support
    bool injective = false;           // weight 0 has frequency exactly 1
    WeightDistribution observed;      // from the sweep (when exact_ran)
};

/// Draws sample_size tuples (seeded, reproducible), checks every weight_fast
/// against the closed-form support, and — when the sweep budget allows —
/// derives the exact weight distribution from the S sweep and compares it to
/// the closed form coefficient by coefficient.
EnumeratorReport enumerator_check(const FieldCtx& ctx, std::int64_t sample_size,
                                  std::uint64_t seed, const SweepOptions& opt = {});

}  // namespace cycloweight
