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

#include <map>
#include <utility>

#include "cycloweight/cyclo.hpp"
#include "cycloweight/expsum.hpp"
#include "cycloweight/field.hpp"
#include "cycloweight/int128.hpp"

namespace cycloweight {

/// Exact rank statistics of the Gram matrices over all nonzero triples:
/// n[i] counts rank m - i, split[eps][i] refines by the sign of the T value.
/// Every division in the closed forms is checked exact; a remainder or a
/// negative count raises InvariantError.
struct RankCounts {
    i128 n[5] = {};
    i128 split[2][5] = {};  // [0] = eps +1, [1] = eps -1

    i128 at(int eps, int i) const { return split[eps > 0 ? 0 : 1][i]; }
};

RankCounts rank_counts(const CodeParams& params);

/// The refined S-value counts n_{eps,i,j} plus the zero count omega.
struct SplitCounts {
    i128 n[2][5][16] = {};  // [eps01][i][j]
    i128 omega = 0;

    i128 at(int eps, int i, int j) const { return n[eps > 0 ? 0 : 1][i][j]; }
};

SplitCounts split_counts(const CodeParams& params);

/// Closed-form value distribution of T (Table 1 of the underlying analysis).
ValueDistribution table1(const CodeParams& params);

/// Closed-form value distribution of S, zero class included (Table 2).
ValueDistribution table2(const CodeParams& params);

/// weight -> frequency, zero-frequency rows kept so the full row set of the
/// table is visible in reports.
using WeightDistribution = std::map<std::int64_t, i128>;

/// Closed-form weight distribution of the code (Table 3).
WeightDistribution table3(const CodeParams& params);

/// Smallest weight with a nonzero frequency.
std::int64_t min_distance(const WeightDistribution& wd);

/// The closed forms of the second and fourth power moments of T, split on
/// p mod 4, as rational integers in Z[zeta_p].
std::pair<CycInt, CycInt> moment_closed_forms(const CodeParams& params);

}  // namespace cycloweight
