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

#include <doctest.h>

#include <array>
#include <limits>

#include "cycloweight/cyclo.hpp"
#include "cycloweight/rng.hpp"

using namespace cycloweight;

TEST_SUITE_BEGIN("cyclo");

TEST_CASE("canonicalize kills the all-ones relation") {
    const std::array<i128, 3> ones{1, 1, 1};
    CHECK(CycInt::from_counts(3, ones).is_zero());

    const std::array<i128, 3> c243{243, 0, 0};
    const CycInt v = CycInt::from_counts(3, c243);
    CHECK(v.is_rational());
    CHECK(v.rational() == 243);

    SplitMix64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int p = 5;
        std::array<i128, 5> counts{}, shifted{};
        const i128 t = i128(rng.below(1000)) - 500;
        for (int i = 0; i < p; ++i) {
            counts[size_t(i)] = i128(rng.below(1000)) - 500;
            shifted[size_t(i)] = checked_add(counts[size_t(i)], t);
        }
        CHECK(CycInt::from_counts(p, counts) == CycInt::from_counts(p, shifted));
    }
}

TEST_CASE("ring arithmetic") {
    const int p = 5;
    const CycInt z = CycInt::zeta_pow(p, 1);
    CHECK(z.mul(CycInt::zeta_pow(p, p - 1)) == CycInt::integer(p, 1));

    SplitMix64 rng(3);
    auto rand_elem = [&] {
        std::array<i128, 5> c{};
        for (auto& v : c) v = i128(rng.below(41)) - 20;
        return CycInt::from_counts(p, c);
    };
    for (int t = 0; t < 20; ++t) {
        const CycInt a = rand_elem(), b = rand_elem(), c = rand_elem();
        CHECK(a.mul(CycInt::zero(p)).is_zero());
        CHECK(a.mul(b) == b.mul(a));
        CHECK(a.mul(b.add(c)) == a.mul(b).add(a.mul(c)));
        CHECK(a.sub(a).is_zero());
        CHECK(a.scalar_mul(-3) == a.mul(CycInt::integer(p, -3)));
    }
}

TEST_CASE("gauss sums: explicit coordinates and G^2 = p*") {
    // p = 3: G = zeta - zeta^2, which is 1 + 2 zeta in canonical coordinates
    const CycInt g3 = gauss_sum(3);
    const CycInt expect3 = CycInt::zeta_pow(3, 1).sub(CycInt::zeta_pow(3, 2));
    CHECK(g3 == expect3);
    CHECK(g3.coords() == std::vector<i128>{1, 2});
    CHECK(g3.mul(g3) == CycInt::integer(3, -3));

    // p = 5: residues {1, 4}
    const CycInt g5 = gauss_sum(5);
    const CycInt expect5 = CycInt::zeta_pow(5, 1)
                               .sub(CycInt::zeta_pow(5, 2))
                               .sub(CycInt::zeta_pow(5, 3))
                               .add(CycInt::zeta_pow(5, 4));
    CHECK(g5 == expect5);
    CHECK(g5.mul(g5) == CycInt::integer(5, 5));

    for (int p : {3, 5, 7, 11}) {
        const CycInt g = gauss_sum(p);
        const i128 pstar = p % 4 == 1 ? i128(p) : -i128(p);
        CHECK(g.mul(g) == CycInt::integer(p, pstar));
    }
}

TEST_CASE("conjugation and rationality") {
    const CycInt g = gauss_sum(7);
    CHECK(g.conj() == g.neg());  // p = 3 (mod 4): conj(G) = -G
    CHECK(g.mul(g.conj()) == CycInt::integer(7, 7));
    CHECK_FALSE(g.is_rational());
    CHECK_THROWS_AS(g.rational(), InvariantError);
    CHECK(gauss_sum(5).conj() == gauss_sum(5));  // p = 1 (mod 4)
}

TEST_CASE("overflow is a hard error, never a silent wrap") {
    const i128 huge = std::numeric_limits<i128>::max() / 2 + 2;
    const CycInt a = CycInt::integer(3, huge);
    CHECK_THROWS_AS(a.add(a), OverflowError);
    CHECK_THROWS_AS(a.mul(CycInt::integer(3, 4)), OverflowError);
}

TEST_CASE("decimal rendering of coordinates") {
    CHECK(to_decimal(i128(0)) == "0");
    CHECK(to_decimal(i128(-1)) == "-1");
    CHECK(to_decimal(checked_pow(10, 30)) == "1000000000000000000000000000000");
    CHECK(parse_i128("-123456789012345678901234567890") ==
          -checked_mul(checked_pow(10, 10), parse_i128("12345678901234567890")) -
              parse_i128("1234567890"));
    CHECK(gauss_sum(3).str() == "1 + 2*z");
    CHECK(CycInt::integer(5, -7).str() == "-7 + 0*z + 0*z^2 + 0*z^3");
}

TEST_CASE("classifier: candidates distinct, round trip, spec anchors") {
    const CodeParams params = CodeParams::make(3, 5, 1);
    const Classifier cls(params);

    // round trip over every candidate class
    for (const auto& [c, v] : cls.candidates()) CHECK(cls.classify(v) == c);

    CHECK(cls.classify(CycInt::integer(3, 243)) == ValueClass::full());
    CHECK(cls.classify(CycInt::zero(3)) == ValueClass::zero());

    // -9 G matches eps zeta^j G p^(m+i-1)/2 at eps=-1, i=0, j=0 (p^2 = 9)
    const CycInt v = gauss_sum(3).scalar_mul(-9);
    CHECK(cls.classify(v) == ValueClass::gauss(-1, 0, 0));

    // something outside the candidate set
    CHECK_THROWS_AS(cls.classify(CycInt::integer(3, 7)), ClassificationError);

    // kind constraints: plain needs m-i even, gauss odd (m = 5)
    for (const auto& [c, v] : cls.candidates()) {
        if (c.kind == SumKind::plain) CHECK((params.m - c.i) % 2 == 0);
        if (c.kind == SumKind::gauss) CHECK((params.m - c.i) % 2 == 1);
    }
}

TEST_SUITE_END();
