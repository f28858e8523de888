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
#include <vector>

#include "cycloweight/errors.hpp"

namespace cycloweight {

/// Parameters (p, m, k) of the code family: p an odd prime, m >= 5 odd,
/// k >= 1 with gcd(m, k) = 1. The two key exponents are d1 = p^k + 1 and
/// d2 = p^{2k} + 1; since they only ever occur as exponents of nonzero field
/// elements they are carried reduced mod p^m - 1.
struct CodeParams {
    int p = 0;
    int m = 0;
    int k = 0;

    /// Validates and returns the parameter set; throws ValidationError with a
    /// distinct kind per violated constraint.
    static CodeParams make(int p, int m, int k);

    std::int64_t q() const;  // p^m
};

bool is_prime(std::int64_t n);

/// Legendre symbol (a/p): 1 for a nonzero square mod p, -1 for a nonsquare,
/// 0 when p | a.
int legendre(std::int64_t a, std::int64_t p);

/// Field element of F_{p^m} in log representation: the exponent of the
/// primitive element pi, with a sentinel for zero. Multiplication is index
/// addition; addition goes through the Zech logarithm table of the context.
class Fq {
  public:
    Fq() : v_(kZero) {}

    static Fq zero() { return Fq(); }
    static Fq from_log(std::int32_t log) { return Fq(log); }

    bool is_zero() const { return v_ == kZero; }
    std::int32_t log() const { return v_; }  // only meaningful when nonzero

    friend bool operator==(Fq a, Fq b) { return a.v_ == b.v_; }
    friend bool operator!=(Fq a, Fq b) { return a.v_ != b.v_; }

  private:
    explicit Fq(std::int32_t v) : v_(v) {}
    static constexpr std::int32_t kZero = -1;
    std::int32_t v_;
};

/// Immutable arithmetic context for F_{p^m}.
///
/// Construction picks the lexicographically smallest monic degree-m
/// polynomial over F_p (coefficients compared constant term first) whose
/// residue class x has multiplicative order p^m - 1, then fills the antilog,
/// log, Zech and trace tables. The basis of F_{p^m} over F_p is fixed as
/// {1, pi, ..., pi^{m-1}}.
///
/// All members are written once in the constructor; every operation is a
/// pure read, so a single context is freely shared across worker threads.
class FieldCtx {
  public:
    explicit FieldCtx(CodeParams params);

    const CodeParams& params() const { return params_; }
    int p() const { return params_.p; }
    int m() const { return params_.m; }
    std::int64_t q() const { return q_; }
    std::int64_t n() const { return n_; }  // q - 1, the order of pi

    /// Modulus coefficients, constant term first, length m + 1, monic.
    const std::vector<int>& modulus() const { return modulus_; }

    std::int64_t d1_mod() const { return d1_mod_; }  // p^k  + 1 mod n
    std::int64_t d2_mod() const { return d2_mod_; }  // p^2k + 1 mod n

    // --- element conversions ------------------------------------------------

    /// Elements enumerated as 0 -> zero, 1 + t -> pi^t. Used by sweeps and by
    /// the CLI to index the whole field.
    Fq from_index(std::int64_t idx) const {
        return idx == 0 ? Fq::zero() : Fq::from_log(std::int32_t(idx - 1));
    }
    std::int64_t index_of(Fq a) const { return a.is_zero() ? 0 : 1 + a.log(); }

    /// Packed coordinate vector (base-p digits over the fixed basis).
    std::int32_t pack(Fq a) const { return a.is_zero() ? 0 : antilog_[a.log()]; }
    Fq from_pack(std::int32_t v) const { return v == 0 ? Fq::zero() : Fq::from_log(log_[v]); }
    int coord(std::int32_t packed, int i) const;  // i-th base-p digit

    /// The scalar c of F_p embedded in F_{p^m}.
    Fq scalar(int c) const;
    int log_of_scalar(int c) const;  // c in 1..p-1

    Fq pi_pow(std::int64_t e) const;  // pi^e for any integer e

    // --- arithmetic ---------------------------------------------------------

    Fq add(Fq a, Fq b) const;
    Fq sub(Fq a, Fq b) const { return add(a, neg(b)); }
    Fq neg(Fq a) const {
        return a.is_zero() ? a : Fq::from_log(std::int32_t((a.log() + n_ / 2) % n_));
    }
    Fq mul(Fq a, Fq b) const {
        if (a.is_zero() || b.is_zero()) return Fq::zero();
        std::int64_t s = std::int64_t(a.log()) + b.log();
        return Fq::from_log(std::int32_t(s >= n_ ? s - n_ : s));
    }
    Fq inv(Fq a) const;                 // throws std::domain_error on zero
    Fq pow(Fq a, std::int64_t e) const; // exponent reduced mod n for nonzero a

    // --- trace --------------------------------------------------------------

    int trace(Fq a) const { return a.is_zero() ? 0 : trace_by_log_[a.log()]; }
    int trace_log(std::int64_t log) const { return trace_by_log_[log]; }
    const std::vector<std::int8_t>& trace_by_log() const { return trace_by_log_; }

    /// Inverse of 2 mod p.
    int half() const { return half_; }

  private:
    void find_modulus();
    void build_tables();
    void check_cyclotomic_cosets() const;

    CodeParams params_;
    std::int64_t q_ = 0;
    std::int64_t n_ = 0;
    std::int64_t d1_mod_ = 0;
    std::int64_t d2_mod_ = 0;
    int half_ = 0;
    std::vector<int> modulus_;
    std::vector<std::int32_t> antilog_;       // log -> packed vector, size n
    std::vector<std::int32_t> log_;           // packed vector -> log, size q
    std::vector<std::int32_t> zech_;          // zech[i] = log(1 + pi^i), -1 when zero
    std::vector<std::int8_t> trace_by_log_;   // Tr(pi^i), size n
};

/// Spec name for the constructor.
inline FieldCtx make_field(CodeParams params) { return FieldCtx(params); }

/// Size of the p-cyclotomic coset of e mod n.
int cyclotomic_coset_size(std::int64_t e, std::int64_t n, std::int64_t p);

/// Smallest member of the p-cyclotomic coset of e mod n.
std::int64_t cyclotomic_coset_min(std::int64_t e, std::int64_t n, std::int64_t p);

}  // namespace cycloweight
