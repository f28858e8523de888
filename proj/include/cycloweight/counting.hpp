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
#include <vector>

#include "cycloweight/field.hpp"
#include "cycloweight/int128.hpp"

namespace cycloweight {

/// Bucket counts of pairs (x1, x2) with
///   x1^2 + x2^2 = a,  x1^{d1} + x2^{d1} = b,  x1^{d2} + x2^{d2} = c,
/// grouped by the first coordinate a. A group maps the packed key
/// b_idx * q + c_idx (element indices, 0 = zero) to the pair count.
struct BucketGroup {
    std::int64_t a_index = 0;
    std::vector<std::pair<std::uint64_t, std::int64_t>> entries;  // sorted by key
    std::int64_t total = 0;

    std::int64_t at(std::int64_t b_index, std::int64_t c_index, std::int64_t q) const;
};

/// Brute-force oracle for the power-sum solution counts. Groups are generated
/// per first coordinate in O(q) from a square-root walk, so memory stays at
/// O(q) even when q^2 pairs are enumerated; the full convolution
///   N4 = sum over (a,b,c) of N(a,b,c) * N(-a,-b,-c)
/// streams over the {a, -a} group pairs.
class PairBuckets {
  public:
    PairBuckets(const FieldCtx& ctx, std::int64_t budget = 100'000'000);

    const FieldCtx& ctx() const { return *ctx_; }

    /// Number of pairs with all three power sums zero (= the bucket at the
    /// origin). Equals 1 when p = 3 (mod 4).
    i128 n2() const { return n2_; }

    /// Convolution count of 4-tuples with all three power sums zero.
    i128 n4() const { return n4_; }

    /// Total pairs over all buckets; always q^2.
    i128 total_pairs() const { return total_; }

    /// Bucket group for first coordinate a (element index). Recomputed on
    /// demand, deterministic.
    BucketGroup group(std::int64_t a_index) const;

    std::int64_t bucket(std::int64_t a_index, std::int64_t b_index, std::int64_t c_index) const;

  private:
    const FieldCtx* ctx_;
    std::vector<std::int32_t> pow2_, powd1_, powd2_;  // per element index
    i128 n2_ = 0, n4_ = 0, total_ = 0;
};

/// Spec name.
inline PairBuckets build_pair_buckets(const FieldCtx& ctx, std::int64_t budget = 100'000'000) {
    return PairBuckets(ctx, budget);
}

inline i128 n2(const PairBuckets& pb) { return pb.n2(); }
inline i128 n4(const PairBuckets& pb) { return pb.n4(); }

/// Histogram of the restricted bucket counts of the unit-sphere systems:
/// first coordinate fixed to sign * 1, (b, c) ranging over F*^2.
struct N1bcReport {
    std::map<std::int64_t, i128> histogram;  // count value -> multiplicity over (b,c) in F*^2
    std::int64_t at_unit = 0;                // N at (b, c) = (sign*1, sign*1)
    bool c_unique_per_b = false;             // for each b at most one c has solutions
    bool no_axis_support = false;            // no solutions with b = 0 or c = 0
};

/// sign = +1 checks the system with x1^2 + x2^2 = 1, sign = -1 the mirrored
/// one. Requires p = 3 (mod 4).
N1bcReport n1bc_distribution(const PairBuckets& pb, int sign);

}  // namespace cycloweight
