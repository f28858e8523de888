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

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cycloweight/field.hpp"

namespace cycloweight {

/// Symmetric matrix over F_p, row-major, entries in [0, p).
struct SymMatrix {
    int n = 0;
    std::vector<int> a;

    explicit SymMatrix(int n_) : n(n_), a(size_t(n_) * n_, 0) {}
    int& at(int i, int j) { return a[size_t(i) * n + j]; }
    int at(int i, int j) const { return a[size_t(i) * n + j]; }
    bool is_symmetric() const;

    friend bool operator==(const SymMatrix&, const SymMatrix&) = default;
};

/// Result of congruence diagonalization M H M' = diag(d_1..d_r, 0..).
/// disc_class is the Legendre symbol of d_1 * ... * d_r (0 when r = 0); it is
/// a congruence invariant even though the d_i are not.
struct DiagInfo {
    int rank = 0;
    std::vector<int> diag;       // the r nonzero diagonal values, pivot order
    int disc_class = 0;          // in {-1, 0, 1}; 0 iff rank 0
    std::vector<int> transform;  // M, n x n row-major, nonsingular
};

/// Per-context cache of the Gram-entry constants. For every basis pair (i, j)
/// three field elements are precomputed so that one Gram entry costs three
/// multiplications and trace lookups:
///   u_ij = v_i^{p^2k} v_j + v_i v_j^{p^2k}
///   w_ij = v_i^{p^k}  v_j + v_i v_j^{p^k}
///   z_ij = v_i v_j
///   h_ij = half * (Tr(alpha u_ij) + Tr(beta w_ij)) + Tr(gamma z_ij).
/// The basis powers are the Frobenius powers p^k and p^2k; that is what the
/// expansion of Tr(alpha x^{p^2k + 1}) forces, and it is what makes the
/// defining identity X H X' = Tr(alpha x^{d2} + beta x^{d1} + gamma x^2) hold.
class GramBuilder {
  public:
    explicit GramBuilder(const FieldCtx& ctx);

    const FieldCtx& ctx() const { return *ctx_; }

    SymMatrix build(Fq alpha, Fq beta, Fq gamma) const;

    /// Hot path: write the m x m entries into a caller-owned row-major span.
    void build_into(std::span<int> out, Fq alpha, Fq beta, Fq gamma) const;

  private:
    const FieldCtx* ctx_;
    int m_;
    // logs of the cached constants, -1 for zero
    std::vector<std::int32_t> u_, w_, z_;
};

SymMatrix gram_matrix(const FieldCtx& ctx, Fq alpha, Fq beta, Fq gamma);

/// Congruence diagonalization over F_p with a deterministic pivot rule:
/// take the lowest-index nonzero diagonal entry of the working block; if the
/// diagonal of the block is zero but the block is not, add the row/column of
/// the lowest nonzero off-diagonal entry into its partner to create one.
DiagInfo diagonalize(const SymMatrix& h, int p);

/// Rank and discriminant class only; same elimination, no transform tracking.
std::pair<int, int> rank_disc(const SymMatrix& h, int p);

/// Solve 2 Y H + A = 0 over F_p. Returns a solution B together with
/// t = (1/2) A B' (well-defined across the solution space), or nullopt when
/// the system is inconsistent.
std::optional<std::pair<std::vector<int>, int>> solve_shift(const SymMatrix& h,
                                                            std::span<const int> a, int p);

}  // namespace cycloweight
