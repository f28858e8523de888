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

#include "cycloweight/field.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cycloweight {

namespace {

constexpr std::int64_t kMaxFieldSize = std::int64_t(1) << 20;

std::int64_t pow_i64(std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t mod) {
    std::int64_t r = 1 % mod;
    b %= mod;
    while (e > 0) {
        if (e & 1) r = (__int128)r * b % mod;
        b = (__int128)b * b % mod;
        e >>= 1;
    }
    return r;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> fs;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

// Polynomial arithmetic over F_p on coefficient vectors, constant term first.
// Used only during the primitive-modulus search; the table-driven arithmetic
// takes over afterwards.
struct PolyModP {
    int p;
    const std::vector<int>& modulus;  // monic, degree m

    std::vector<int> mul(const std::vector<int>& a, const std::vector<int>& b) const {
        int m = int(modulus.size()) - 1;
        std::vector<int> prod(a.size() + b.size() - 1, 0);
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i] == 0) continue;
            for (size_t j = 0; j < b.size(); ++j)
                prod[i + j] = int((prod[i + j] + std::int64_t(a[i]) * b[j]) % p);
        }
        // reduce mod the monic modulus
        for (int d = int(prod.size()) - 1; d >= m; --d) {
            int c = prod[d];
            if (c == 0) continue;
            prod[d] = 0;
            for (int i = 0; i < m; ++i) {
                int t = prod[d - m + i] - int(std::int64_t(c) * modulus[i] % p);
                prod[d - m + i] = t % p < 0 ? t % p + p : t % p;
            }
        }
        prod.resize(m);
        return prod;
    }

    std::vector<int> pow_x(std::int64_t e) const {
        int m = int(modulus.size()) - 1;
        std::vector<int> result(m, 0), base(m, 0);
        result[0] = 1;
        if (m == 1) {
            // x reduces immediately; not reachable here (m >= 5) but keep sane
            base[0] = (p - modulus[0]) % p;
        } else {
            base[1] = 1;
        }
        while (e > 0) {
            if (e & 1) result = mul(result, base);
            base = mul(base, base);
            e >>= 1;
        }
        return result;
    }

    bool is_one(const std::vector<int>& a) const {
        if (a.empty() || a[0] != 1) return false;
        return std::all_of(a.begin() + 1, a.end(), [](int c) { return c == 0; });
    }
};

}  // namespace

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

int legendre(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    std::int64_t r = mod_pow(a, (p - 1) / 2, p);
    return r == 1 ? 1 : -1;
}

CodeParams CodeParams::make(int p, int m, int k) {
    if (p < 3 || p % 2 == 0 || !is_prime(p))
        throw ValidationError(ValidationError::Kind::p_not_odd_prime, "p must be an odd prime");
    if (m % 2 == 0)
        throw ValidationError(ValidationError::Kind::m_even, "m must be odd and >= 5");
    if (m < 5)
        throw ValidationError(ValidationError::Kind::m_too_small, "m must be odd and >= 5");
    if (k < 1)
        throw ValidationError(ValidationError::Kind::k_not_positive, "k must be >= 1");
    if (std::gcd(m, k) != 1)
        throw ValidationError(ValidationError::Kind::gcd_not_one, "gcd(m, k) must be 1");
    // table guard: all desk-scale targets fit comfortably below 2^20
    std::int64_t q = 1;
    for (int i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxFieldSize)
            throw ValidationError(ValidationError::Kind::field_too_large,
                                  "p^m exceeds the table limit 2^20");
    }
    return CodeParams{p, m, k};
}

std::int64_t CodeParams::q() const { return pow_i64(p, m); }

int cyclotomic_coset_size(std::int64_t e, std::int64_t n, std::int64_t p) {
    e %= n;
    if (e < 0) e += n;
    std::int64_t cur = e;
    int size = 0;
    do {
        cur = cur * p % n;
        ++size;
    } while (cur != e);
    return size;
}

std::int64_t cyclotomic_coset_min(std::int64_t e, std::int64_t n, std::int64_t p) {
    e %= n;
    if (e < 0) e += n;
    std::int64_t cur = e, best = e;
    do {
        cur = cur * p % n;
        best = std::min(best, cur);
    } while (cur != e);
    return best;
}

FieldCtx::FieldCtx(CodeParams params) : params_(CodeParams::make(params.p, params.m, params.k)) {
    q_ = params_.q();
    n_ = q_ - 1;
    d1_mod_ = (mod_pow(params_.p, params_.k, n_) + 1) % n_;
    d2_mod_ = (mod_pow(params_.p, 2LL * params_.k, n_) + 1) % n_;
    half_ = int(mod_pow(2, params_.p - 2, params_.p));  // 2^{-1} mod p
    find_modulus();
    build_tables();
    check_cyclotomic_cosets();
}

void FieldCtx::find_modulus() {
    const int p = params_.p, m = params_.m;
    const auto factors = prime_factors(n_);

    // Lexicographic order on (c_0, ..., c_{m-1}) with the constant term most
    // significant: counter value = c_0 p^{m-1} + ... + c_{m-1}.
    std::vector<int> cand(m + 1, 0);
    cand[m] = 1;  // monic
    for (std::int64_t counter = 0; counter < q_; ++counter) {
        // counter = c_0 p^{m-1} + ... + c_{m-1}, so increasing counter walks
        // the coefficient tuples in lexicographic order.
        std::int64_t w = counter;
        for (int i = m - 1; i >= 0; --i) {
            cand[i] = int(w % p);
            w /= p;
        }

        if (cand[0] == 0) continue;  // x | f(x): x is a zero divisor

        PolyModP ring{p, cand};
        // ord(x) == q - 1  <=>  x^{q-1} = 1 and x^{(q-1)/l} != 1 for primes l.
        // That forces F_p[x]/(f) to be a field, hence f irreducible and x
        // primitive.
        if (!ring.is_one(ring.pow_x(n_))) continue;
        bool primitive = true;
        for (std::int64_t l : factors) {
            if (ring.is_one(ring.pow_x(n_ / l))) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            modulus_ = cand;
            return;
        }
    }
    throw InvariantError("no primitive polynomial found (unreachable for valid params)");
}

void FieldCtx::build_tables() {
    const int p = params_.p, m = params_.m;

    antilog_.assign(size_t(n_), 0);
    log_.assign(size_t(q_), -1);

    // iterate multiplication by x in coordinate space
    std::vector<int> cur(m, 0);
    cur[0] = 1;
    for (std::int64_t i = 0; i < n_; ++i) {
        std::int32_t packed = 0;
        for (int d = m - 1; d >= 0; --d) packed = packed * p + cur[d];
        if (log_[packed] != -1) throw InvariantError("antilog sequence repeats: modulus not primitive");
        antilog_[i] = packed;
        log_[packed] = std::int32_t(i);
        // cur *= x mod f
        int carry = cur[m - 1];
        for (int d = m - 1; d > 0; --d) cur[d] = cur[d - 1];
        cur[0] = 0;
        if (carry != 0) {
            for (int d = 0; d < m; ++d) {
                int t = cur[d] - int(std::int64_t(carry) * modulus_[d] % p);
                cur[d] = t % p < 0 ? t % p + p : t % p;
            }
        }
    }
    if (std::count(cur.begin(), cur.end(), 0) != m - 1 || cur[0] != 1)
        throw InvariantError("pi^{q-1} != 1: modulus not primitive");

    // Zech logarithms: zech[i] = log(1 + pi^i), -1 when 1 + pi^i = 0.
    zech_.assign(size_t(n_), -1);
    for (std::int64_t i = 0; i < n_; ++i) {
        std::int32_t v = antilog_[i];
        std::int32_t lo = v % p;
        std::int32_t w = v - lo + (lo + 1) % p;
        zech_[i] = w == 0 ? -1 : log_[w];
    }

    // Basis traces Tr(pi^t) via the Frobenius orbit sums, then linearity.
    std::vector<int> basis_trace(m, 0);
    for (int t = 0; t < m; ++t) {
        std::vector<int> acc(m, 0);
        std::int64_t pk = 1;
        for (int j = 0; j < m; ++j) {
            std::int32_t v = antilog_[(t * pk) % n_];
            for (int d = 0; d < m; ++d) {
                acc[d] = (acc[d] + v % p) % p;
                v /= p;
            }
            pk = pk * p % n_;
        }
        for (int d = 1; d < m; ++d)
            if (acc[d] != 0) throw InvariantError("trace of a basis element is not scalar");
        basis_trace[t] = acc[0];
    }
    trace_by_log_.assign(size_t(n_), 0);
    for (std::int64_t i = 0; i < n_; ++i) {
        std::int32_t v = antilog_[i];
        int tr = 0;
        for (int d = 0; d < m; ++d) {
            tr += basis_trace[d] * (v % p);
            v /= p;
        }
        trace_by_log_[i] = std::int8_t(tr % p);
    }
}

void FieldCtx::check_cyclotomic_cosets() const {
    // {1}, {2}, {p^k+1}, {p^{2k}+1} must land in four distinct p-cyclotomic
    // cosets mod q-1; this is what makes the four check polynomials distinct.
    std::set<std::int64_t> reps;
    for (std::int64_t e : {std::int64_t(1), std::int64_t(2), d1_mod_, d2_mod_})
        reps.insert(cyclotomic_coset_min(e, n_, params_.p));
    if (reps.size() != 4)
        throw InvariantError("exponents 1, 2, p^k+1, p^2k+1 do not lie in distinct cyclotomic cosets");
}

int FieldCtx::coord(std::int32_t packed, int i) const {
    for (int d = 0; d < i; ++d) packed /= params_.p;
    return packed % params_.p;
}

Fq FieldCtx::scalar(int c) const {
    c %= params_.p;
    if (c < 0) c += params_.p;
    return c == 0 ? Fq::zero() : from_pack(c);
}

int FieldCtx::log_of_scalar(int c) const {
    c %= params_.p;
    if (c < 0) c += params_.p;
    if (c == 0) throw std::domain_error("log of zero");
    return log_[c];
}

Fq FieldCtx::pi_pow(std::int64_t e) const {
    e %= n_;
    if (e < 0) e += n_;
    return Fq::from_log(std::int32_t(e));
}

Fq FieldCtx::add(Fq a, Fq b) const {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::int64_t i = a.log(), j = b.log();
    std::int64_t d = j - i;
    if (d < 0) d += n_;
    std::int32_t z = zech_[d];
    if (z < 0) return Fq::zero();
    std::int64_t s = i + z;
    return Fq::from_log(std::int32_t(s >= n_ ? s - n_ : s));
}

Fq FieldCtx::inv(Fq a) const {
    if (a.is_zero()) throw std::domain_error("inversion of zero");
    return Fq::from_log(std::int32_t(a.log() == 0 ? 0 : n_ - a.log()));
}

Fq FieldCtx::pow(Fq a, std::int64_t e) const {
    if (a.is_zero()) {
        if (e < 0) throw std::domain_error("inversion of zero");
        return e == 0 ? Fq::from_log(0) : Fq::zero();
    }
    __int128 s = (__int128)a.log() * e % n_;
    if (s < 0) s += n_;
    return Fq::from_log(std::int32_t(s));
}

}  // namespace cycloweight
