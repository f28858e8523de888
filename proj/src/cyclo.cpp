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

#include "cycloweight/cyclo.hpp"

#include <algorithm>

namespace cycloweight {

CycInt CycInt::integer(int p, i128 n) {
    CycInt r(p);
    r.c_[0] = n;
    return r;
}

CycInt CycInt::zeta_pow(int p, std::int64_t j) {
    j %= p;
    if (j < 0) j += p;
    std::vector<i128> counts(size_t(p), 0);
    counts[size_t(j)] = 1;
    return from_counts(p, counts);
}

CycInt CycInt::from_counts(int p, std::span<const i128> counts) {
    if (int(counts.size()) != p) throw std::invalid_argument("from_counts: need p entries");
    CycInt r(p);
    for (int i = 0; i + 1 < p; ++i) r.c_[size_t(i)] = checked_sub(counts[size_t(i)], counts[size_t(p - 1)]);
    return r;
}

bool CycInt::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](i128 v) { return v == 0; });
}

bool CycInt::is_rational() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](i128 v) { return v == 0; });
}

i128 CycInt::rational() const {
    if (!is_rational()) throw InvariantError("cyclotomic value is not a rational integer: " + str());
    return c_[0];
}

CycInt CycInt::add(const CycInt& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed cyclotomic rings");
    CycInt r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = checked_add(c_[i], o.c_[i]);
    return r;
}

CycInt CycInt::sub(const CycInt& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed cyclotomic rings");
    CycInt r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = checked_sub(c_[i], o.c_[i]);
    return r;
}

CycInt CycInt::neg() const {
    CycInt r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = checked_sub(0, c_[i]);
    return r;
}

CycInt CycInt::mul(const CycInt& o) const {
    if (p_ != o.p_) throw std::invalid_argument("mixed cyclotomic rings");
    // multiply as exponent vectors mod p (zeta^p = 1), then canonicalize
    std::vector<i128> counts(size_t(p_), 0);
    for (int i = 0; i + 1 < p_; ++i) {
        if (c_[size_t(i)] == 0) continue;
        for (int j = 0; j + 1 < p_; ++j) {
            if (o.c_[size_t(j)] == 0) continue;
            int e = (i + j) % p_;
            counts[size_t(e)] = checked_add(counts[size_t(e)], checked_mul(c_[size_t(i)], o.c_[size_t(j)]));
        }
    }
    return from_counts(p_, counts);
}

CycInt CycInt::scalar_mul(i128 s) const {
    CycInt r(p_);
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = checked_mul(c_[i], s);
    return r;
}

CycInt CycInt::pow(int e) const {
    if (e < 0) throw std::domain_error("CycInt::pow: negative exponent");
    CycInt r = integer(p_, 1);
    for (int t = 0; t < e; ++t) r = r.mul(*this);
    return r;
}

CycInt CycInt::galois(std::int64_t t) const {
    t %= p_;
    if (t < 0) t += p_;
    if (t == 0) throw std::domain_error("galois: t must be a unit mod p");
    std::vector<i128> counts(size_t(p_), 0);
    for (int i = 0; i + 1 < p_; ++i) counts[size_t(std::int64_t(i) * t % p_)] = c_[size_t(i)];
    return from_counts(p_, counts);
}

std::string CycInt::str() const {
    std::string s;
    for (int i = 0; i + 1 < p_; ++i) {
        if (i > 0) s += " + ";
        s += to_decimal(c_[size_t(i)]);
        if (i == 1) s += "*z";
        if (i > 1) s += "*z^" + std::to_string(i);
    }
    return s;
}

std::strong_ordering operator<=>(const CycInt& a, const CycInt& b) {
    if (auto c = a.p_ <=> b.p_; c != 0) return c;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
    return std::strong_ordering::equal;
}

CycInt gauss_sum(int p) {
    std::vector<i128> counts(size_t(p), 0);
    for (int a = 1; a < p; ++a) counts[size_t(a)] = legendre(a, p);
    CycInt g = CycInt::from_counts(p, counts);
    i128 pstar = (p % 4 == 1) ? i128(p) : -i128(p);
    if (g.mul(g) != CycInt::integer(p, pstar))
        throw InvariantError("Gauss sum sanity check failed: G^2 != p*");
    return g;
}

const char* to_string(SumKind k) {
    switch (k) {
        case SumKind::zero: return "zero";
        case SumKind::plain: return "plain";
        case SumKind::gauss: return "gauss";
        case SumKind::full: return "full";
    }
    return "?";
}

Classifier::Classifier(CodeParams params) : params_(params) {
    const int p = params_.p, m = params_.m;
    const CycInt g = gauss_sum(p);

    auto insert = [&](ValueClass cls, CycInt v) {
        if (!by_value_.emplace(v, cls).second)
            throw InvariantError("candidate value set is not pairwise distinct");
        by_class_.emplace(cls, std::move(v));
    };

    insert(ValueClass::zero(), CycInt::zero(p));
    insert(ValueClass::full(), CycInt::integer(p, checked_pow(p, m)));
    for (int i = 0; i <= 4; ++i) {
        const bool even = (m - i) % 2 == 0;
        const i128 mag = even ? checked_pow(p, (m + i) / 2) : checked_pow(p, (m + i - 1) / 2);
        for (int eps : {1, -1}) {
            for (int j = 0; j < p; ++j) {
                CycInt v = CycInt::zeta_pow(p, j).scalar_mul(eps * mag);
                if (!even) v = v.mul(g);
                insert(even ? ValueClass::plain(eps, i, j) : ValueClass::gauss(eps, i, j),
                       std::move(v));
            }
        }
    }
}

ValueClass Classifier::classify(const CycInt& v) const {
    auto it = by_value_.find(v);
    if (it == by_value_.end())
        throw ClassificationError("value outside the admissible candidate set: " + v.str());
    return it->second;
}

const CycInt& Classifier::value_of(const ValueClass& c) const {
    auto it = by_class_.find(c);
    if (it == by_class_.end()) throw std::invalid_argument("unknown value class");
    return it->second;
}

}  // namespace cycloweight
