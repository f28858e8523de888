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

#include <compare>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cycloweight/errors.hpp"
#include "cycloweight/field.hpp"
#include "cycloweight/int128.hpp"

namespace cycloweight {

/// Exact element of Z[zeta_p], zeta_p a primitive p-th root of unity.
///
/// Coordinates are canonical with respect to the integral basis
/// {1, zeta, ..., zeta^{p-2}}: a length-p count vector (c_0, ..., c_{p-1})
/// reduces to (c_i - c_{p-1})_{i<p-1} via 1 + zeta + ... + zeta^{p-1} = 0.
/// Equality is coordinate-wise equality of canonical forms. Coordinates are
/// checked 128-bit integers; overflow raises instead of wrapping.
class CycInt {
  public:
    CycInt() = default;  // zero of an unspecified ring; usable only after assignment

    static CycInt zero(int p) { return CycInt(p); }
    static CycInt integer(int p, i128 n);
    static CycInt zeta_pow(int p, std::int64_t j);

    /// Canonicalize a length-p count vector.
    static CycInt from_counts(int p, std::span<const i128> counts);

    int p() const { return p_; }
    const std::vector<i128>& coords() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;  // lies in Z
    i128 rational() const;     // throws InvariantError when not rational

    CycInt add(const CycInt& o) const;
    CycInt sub(const CycInt& o) const;
    CycInt neg() const;
    CycInt mul(const CycInt& o) const;
    CycInt scalar_mul(i128 s) const;
    CycInt pow(int e) const;  // e >= 0

    /// Ring automorphism zeta -> zeta^t, gcd(t, p) = 1. conj() is t = p-1.
    CycInt galois(std::int64_t t) const;
    CycInt conj() const { return galois(p_ - 1); }

    /// "a0 + a1*z + a2*z^2 + ..." with signed decimal coefficients.
    std::string str() const;

    friend bool operator==(const CycInt& a, const CycInt& b) {
        return a.p_ == b.p_ && a.c_ == b.c_;
    }
    friend bool operator!=(const CycInt& a, const CycInt& b) { return !(a == b); }
    /// Lexicographic on coordinates; gives maps a deterministic order.
    friend std::strong_ordering operator<=>(const CycInt& a, const CycInt& b);

  private:
    explicit CycInt(int p) : p_(p), c_(size_t(p - 1), 0) {}
    int p_ = 0;
    std::vector<i128> c_;
};

/// Spec name for count-vector canonicalization.
inline CycInt canonicalize(int p, std::span<const i128> counts) {
    return CycInt::from_counts(p, counts);
}

/// Quadratic Gauss sum G = sum_a (a/p) zeta^a. G^2 = p* = (-1)^{(p-1)/2} p,
/// which fixes the meaning of sqrt(p*) everywhere in this project: epsilon in
/// a ValueClass is the sign relative to G.
CycInt gauss_sum(int p);

enum class SumKind : int { zero = 0, plain = 1, gauss = 2, full = 3 };

const char* to_string(SumKind k);

/// Symbolic classification of an exponential-sum value:
///   plain : eps * zeta^j * p^{(m+i)/2}        (m - i even)
///   gauss : eps * zeta^j * G * p^{(m+i-1)/2}  (m - i odd)
///   zero  : 0
///   full  : p^m
/// For kinds zero/full the (eps, i, j) fields are normalized to (+1, 0, 0).
struct ValueClass {
    SumKind kind = SumKind::zero;
    int eps = 1;
    int i = 0;
    int j = 0;

    static ValueClass zero() { return {SumKind::zero, 1, 0, 0}; }
    static ValueClass full() { return {SumKind::full, 1, 0, 0}; }
    static ValueClass plain(int eps, int i, int j) { return {SumKind::plain, eps, i, j}; }
    static ValueClass gauss(int eps, int i, int j) { return {SumKind::gauss, eps, i, j}; }

    friend bool operator==(const ValueClass&, const ValueClass&) = default;
    friend std::strong_ordering operator<=>(const ValueClass& a, const ValueClass& b) {
        if (auto c = int(a.kind) <=> int(b.kind); c != 0) return c;
        if (auto c = a.i <=> b.i; c != 0) return c;
        if (auto c = b.eps <=> a.eps; c != 0) return c;  // +1 sorts before -1
        return a.j <=> b.j;
    }
};

class ClassificationError : public InvariantError {
  public:
    explicit ClassificationError(const std::string& what) : InvariantError(what) {}
};

/// Bidirectional map between the finite candidate set a quadratic-form
/// character sum can take at given (p, m) and its symbolic classes. The
/// candidate canonical forms are pairwise distinct (asserted once at
/// construction).
class Classifier {
  public:
    explicit Classifier(CodeParams params);

    const CodeParams& params() const { return params_; }

    /// Exact match against the candidate set; throws ClassificationError when
    /// the value is not in it (which signals a bug, not bad input).
    ValueClass classify(const CycInt& v) const;

    /// The candidate value belonging to a class.
    const CycInt& value_of(const ValueClass& c) const;

    const std::map<ValueClass, CycInt>& candidates() const { return by_class_; }

  private:
    CodeParams params_;
    std::map<ValueClass, CycInt> by_class_;
    std::map<CycInt, ValueClass> by_value_;
};

}  // namespace cycloweight
