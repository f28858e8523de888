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
#include <stdexcept>
#include <string>

namespace cycloweight {

/// Exact 128-bit integer used for all counts, frequencies and cyclotomic
/// coordinates. Arithmetic that could wrap goes through the checked helpers
/// below; silent wraparound is never acceptable in this code base.
using i128 = __int128;

class OverflowError : public std::runtime_error {
  public:
    explicit OverflowError(const std::string& what) : std::runtime_error(what) {}
};

inline i128 checked_add(i128 a, i128 b) {
    i128 r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int128 addition overflow");
    return r;
}

inline i128 checked_sub(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int128 subtraction overflow");
    return r;
}

inline i128 checked_mul(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int128 multiplication overflow");
    return r;
}

/// Division that must leave no remainder; a remainder means a closed-form
/// frequency formula was applied outside its domain.
inline i128 exact_div(i128 num, i128 den, const char* what = "exact division") {
    if (den == 0) throw std::domain_error(std::string(what) + ": division by zero");
    if (num % den != 0) throw std::domain_error(std::string(what) + ": not divisible");
    return num / den;
}

/// p^e with overflow checking, e >= 0.
inline i128 checked_pow(i128 base, int e) {
    if (e < 0) throw std::domain_error("checked_pow: negative exponent");
    i128 r = 1;
    for (int t = 0; t < e; ++t) r = checked_mul(r, base);
    return r;
}

inline std::string to_decimal(i128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    // careful with INT128_MIN; build digits from the magnitude in unsigned space
    unsigned __int128 mag = neg ? (unsigned __int128)(-(v + 1)) + 1 : (unsigned __int128)v;
    std::string s;
    while (mag > 0) {
        s.push_back(char('0' + int(mag % 10)));
        mag /= 10;
    }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
}

inline i128 parse_i128(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("parse_i128: empty string");
    size_t pos = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        pos = 1;
    }
    if (pos == s.size()) throw std::invalid_argument("parse_i128: no digits");
    i128 v = 0;
    for (; pos < s.size(); ++pos) {
        if (s[pos] < '0' || s[pos] > '9') throw std::invalid_argument("parse_i128: bad digit");
        v = checked_add(checked_mul(v, 10), s[pos] - '0');
    }
    return neg ? -v : v;
}

}  // namespace cycloweight
