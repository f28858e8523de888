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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cycloweight/code.hpp"
#include "cycloweight/counting.hpp"

namespace py = pybind11;
using namespace cycloweight;

namespace {

// counts routinely exceed 2^63; hand them to python as exact ints
py::int_ py_int(i128 v) {
    return py::module_::import("builtins").attr("int")(to_decimal(v));
}

py::list coeffs(const CycInt& v) {
    py::list out;
    for (i128 c : v.coords()) out.append(py_int(c));
    return out;
}

py::dict class_dict(const ValueClass& c) {
    py::dict d;
    d["kind"] = to_string(c.kind);
    d["epsilon"] = c.eps;
    d["i"] = c.i;
    d["j"] = c.j;
    return d;
}

Fq elem(const FieldCtx& ctx, std::int64_t index) {
    if (index < 0 || index >= ctx.q()) throw py::value_error("element index out of range");
    return ctx.from_index(index);
}

py::list dist_list(const ValueDistribution& d) {
    py::list out;
    for (const auto& [c, k] : d.counts) {
        py::dict e = class_dict(c);
        e["count"] = py_int(k);
        out.append(e);
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_cycloweight, mod) {
    mod.doc() = "exact weight-distribution toolkit for the four-zero reducible cyclic codes";

    py::register_exception<ValidationError>(mod, "ValidationError", PyExc_ValueError);
    py::register_exception<BudgetError>(mod, "BudgetError", PyExc_RuntimeError);
    py::register_exception<InvariantError>(mod, "InvariantError", PyExc_ArithmeticError);

    mod.def("legendre", &legendre, py::arg("a"), py::arg("p"));
    mod.def(
        "gauss_sum_coeffs", [](int p) { return coeffs(gauss_sum(p)); }, py::arg("p"),
        "canonical coordinates of the quadratic Gauss sum over {1, z, ..., z^{p-2}}");

    py::class_<FieldCtx>(mod, "Field")
        .def(py::init([](int p, int m, int k) { return FieldCtx(CodeParams::make(p, m, k)); }),
             py::arg("p"), py::arg("m"), py::arg("k"))
        .def_property_readonly("q", &FieldCtx::q)
        .def_property_readonly("n", &FieldCtx::n)
        .def_property_readonly("p", &FieldCtx::p)
        .def_property_readonly("m", &FieldCtx::m)
        .def_property_readonly("modulus", &FieldCtx::modulus)
        .def(
            "trace",
            [](const FieldCtx& ctx, std::int64_t x) { return ctx.trace(elem(ctx, x)); },
            py::arg("index"), "trace of the element with index (0 = zero, 1 + t = pi^t)")
        .def("mul",
             [](const FieldCtx& ctx, std::int64_t a, std::int64_t b) {
                 return ctx.index_of(ctx.mul(elem(ctx, a), elem(ctx, b)));
             })
        .def("add",
             [](const FieldCtx& ctx, std::int64_t a, std::int64_t b) {
                 return ctx.index_of(ctx.add(elem(ctx, a), elem(ctx, b)));
             })
        .def("t_direct",
             [](const FieldCtx& ctx, std::int64_t a, std::int64_t b, std::int64_t g) {
                 return coeffs(t_direct(ctx, elem(ctx, a), elem(ctx, b), elem(ctx, g)));
             })
        .def("t_fast",
             [](const FieldCtx& ctx, std::int64_t a, std::int64_t b, std::int64_t g) {
                 const GramBuilder gb(ctx);
                 const Classifier cls(ctx.params());
                 return coeffs(t_fast(gb, cls, elem(ctx, a), elem(ctx, b), elem(ctx, g)));
             })
        .def("s_direct",
             [](const FieldCtx& ctx, std::int64_t a, std::int64_t b, std::int64_t g,
                std::int64_t d) {
                 return coeffs(
                     s_direct(ctx, elem(ctx, a), elem(ctx, b), elem(ctx, g), elem(ctx, d)));
             })
        .def("s_fast",
             [](const FieldCtx& ctx, std::int64_t a, std::int64_t b, std::int64_t g,
                std::int64_t d) {
                 const GramBuilder gb(ctx);
                 const Classifier cls(ctx.params());
                 return coeffs(
                     s_fast(gb, cls, elem(ctx, a), elem(ctx, b), elem(ctx, g), elem(ctx, d)));
             })
        .def("classify_t",
             [](const FieldCtx& ctx, std::int64_t a, std::int64_t b, std::int64_t g) {
                 const Classifier cls(ctx.params());
                 return class_dict(
                     cls.classify(t_direct(ctx, elem(ctx, a), elem(ctx, b), elem(ctx, g))));
             })
        .def("weight_direct",
             [](const FieldCtx& ctx, std::int64_t a, std::int64_t b, std::int64_t g,
                std::int64_t d) {
                 return weight_direct(ctx, elem(ctx, a), elem(ctx, b), elem(ctx, g),
                                      elem(ctx, d));
             })
        .def("weight_fast",
             [](const FieldCtx& ctx, std::int64_t a, std::int64_t b, std::int64_t g,
                std::int64_t d) {
                 return weight_fast(ctx, elem(ctx, a), elem(ctx, b), elem(ctx, g), elem(ctx, d));
             })
        .def("check_poly_degrees",
             [](const FieldCtx& ctx) {
                 const CheckPolys cp = min_check_polys(ctx);
                 std::vector<int> degs;
                 for (const auto& h : cp.h) degs.push_back(int(h.size()) - 1);
                 return degs;
             })
        .def(
            "n2",
            [](const FieldCtx& ctx, std::int64_t budget) {
                return py_int(PairBuckets(ctx, budget).n2());
            },
            py::arg("budget") = 100'000'000)
        .def(
            "n4",
            [](const FieldCtx& ctx, std::int64_t budget) {
                return py_int(PairBuckets(ctx, budget).n4());
            },
            py::arg("budget") = 100'000'000)
        .def(
            "verify_t",
            [](const FieldCtx& ctx, std::int64_t budget, int jobs) {
                return t_distribution(ctx, {budget, jobs}).dist == table1(ctx.params());
            },
            py::arg("budget") = 100'000'000, py::arg("jobs") = 1,
            "full T sweep against the closed-form distribution");

    mod.def(
        "table1",
        [](int p, int m, int k) { return dist_list(table1(CodeParams::make(p, m, k))); },
        py::arg("p"), py::arg("m"), py::arg("k"));
    mod.def(
        "table2",
        [](int p, int m, int k) { return dist_list(table2(CodeParams::make(p, m, k))); },
        py::arg("p"), py::arg("m"), py::arg("k"));
    mod.def(
        "table3",
        [](int p, int m, int k) {
            py::dict out;
            for (const auto& [w, f] : table3(CodeParams::make(p, m, k)))
                out[py::int_(w)] = py_int(f);
            return out;
        },
        py::arg("p"), py::arg("m"), py::arg("k"),
        "closed-form weight -> frequency map (zero-frequency rows included)");
    mod.def(
        "rank_counts",
        [](int p, int m, int k) {
            const RankCounts rc = rank_counts(CodeParams::make(p, m, k));
            py::dict out;
            for (int i = 0; i <= 4; ++i) {
                out[py::str("n" + std::to_string(i))] = py_int(rc.n[i]);
                out[py::str("n+" + std::to_string(i))] = py_int(rc.at(1, i));
                out[py::str("n-" + std::to_string(i))] = py_int(rc.at(-1, i));
            }
            return out;
        },
        py::arg("p"), py::arg("m"), py::arg("k"));
    mod.def(
        "moment_closed_forms",
        [](int p, int m, int k) {
            const auto [m2, m4] = moment_closed_forms(CodeParams::make(p, m, k));
            return py::make_tuple(py_int(m2.rational()), py_int(m4.rational()));
        },
        py::arg("p"), py::arg("m"), py::arg("k"));
    mod.def(
        "min_distance",
        [](int p, int m, int k) { return min_distance(table3(CodeParams::make(p, m, k))); },
        py::arg("p"), py::arg("m"), py::arg("k"));
}
