# Copyright 2026 The cycloweight authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Smoke tests for the pybind11 module."""

import random
import sys

import _cycloweight as cw


def check(cond, what):
    if not cond:
        print("FAIL:", what)
        sys.exit(1)


def main():
    check(cw.legendre(1, 3) == 1, "legendre(1,3)")
    check(cw.legendre(-1, 3) == -1, "legendre(-1,3)")
    check(cw.gauss_sum_coeffs(3) == [1, 2], "G(3) = 1 + 2z")

    f = cw.Field(3, 5, 1)
    check(f.q == 243 and f.n == 242, "field size")
    check(f.trace(0) == 0, "Tr(0)")
    check(f.check_poly_degrees() == [5, 5, 5, 5], "check poly degrees")

    # exponential sums: the zero triple and a fast/direct agreement spot check
    check(f.t_direct(0, 0, 0) == [243, 0], "T(0,0,0) = q")
    rng = random.Random(7)
    for _ in range(25):
        a, b, g, d = (rng.randrange(243) for _ in range(4))
        check(f.t_fast(a, b, g) == f.t_direct(a, b, g), "t_fast == t_direct")
        check(f.s_fast(a, b, g, d) == f.s_direct(a, b, g, d), "s_fast == s_direct")
        check(
            f.weight_fast(a, b, g, d) == f.weight_direct(a, b, g, d),
            "weight_fast == weight_direct",
        )

    # the published example: [242, 20, 81] code and its enumerator
    t3 = cw.table3(3, 5, 1)
    check(t3[0] == 1, "A_0 = 1")
    check(t3[81] == 484, "A_81")
    check(t3[162] == 1618713316, "A_162")
    check(t3[243] == 0, "vanishing extreme row")
    check(sum(t3.values()) == 3**20, "enumerator total")
    check(cw.min_distance(3, 5, 1) == 81, "min distance")

    # counting oracle and moments
    check(f.n2() == 1, "N2 = 1")
    check(f.n4() == 468513, "N4 = 468513")
    m2, m4 = cw.moment_closed_forms(3, 5, 1)
    check(m2 == 3**15, "second moment")
    check(m4 == 3**15 * 468513, "fourth moment")
    check(m4 == 3**15 * f.n4(), "moment/counting identity")

    rc = cw.rank_counts(3, 5, 1)
    check(rc["n1"] == 4586868 and rc["n3"] == 21780, "rank counts")

    # validation errors surface as ValueError
    try:
        cw.Field(3, 4, 1)
        check(False, "m = 4 must be rejected")
    except ValueError:
        pass

    print("python smoke tests passed")


if __name__ == "__main__":
    main()
