// Copyright 2026 The mubkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mubkit/acceptance.h"
#include "mubkit/designs.h"
#include "mubkit/entropy.h"
#include "mubkit/locking.h"
#include "mubkit/mubs.h"
#include "mubkit/serialize.h"
#include "mubkit/uncertainty.h"

namespace py = pybind11;
using namespace mubkit;

namespace {

// Reports cross the boundary as JSON text; the Python side turns them into dicts.
template <typename T>
std::string dumped(const T &value) {
    return to_json(value).dump();
}

StateVector as_state(const Vector &v) { return StateVector::normalized(v); }

}  // namespace

PYBIND11_MODULE(_mubkit, m) {
    m.doc() = "Mutually unbiased bases, entropic uncertainty and information locking";

    py::register_exception<std::invalid_argument>(m, "InvalidArgument", PyExc_ValueError);

    py::class_<MubSet>(m, "MubSet")
        .def_property_readonly("dim", &MubSet::dim)
        .def_property_readonly("size", &MubSet::size)
        .def_property_readonly("family", [](const MubSet &s) { return to_string(s.family()); })
        .def_property_readonly("metadata", &MubSet::metadata)
        .def_property_readonly("labels",
                               [](const MubSet &s) {
                                   std::vector<std::string> out;
                                   for (const auto &b : s.bases()) out.push_back(b.label());
                                   return out;
                               })
        .def("basis", [](const MubSet &s, size_t t) -> Matrix {
            if (t >= s.size()) throw py::index_error("basis index out of range");
            return s.basis(t).unitary();
        })
        .def("take", &MubSet::take, py::arg("m"))
        .def("subset", &MubSet::subset, py::arg("indices"))
        .def("to_json", [](const MubSet &s) { return to_json(s).dump(); })
        .def_static("from_json", [](const std::string &text) { return mubset_from_json(Json::parse(text)); })
        .def("__len__", &MubSet::size)
        .def("__repr__", [](const MubSet &s) {
            return "<MubSet " + to_string(s.family()) + " d=" + std::to_string(s.dim()) +
                   " m=" + std::to_string(s.size()) + ">";
        });

    m.def("prime_mubs", &prime_mubs, py::arg("d"));
    m.def("qubit_triple", &qubit_triple, py::arg("n"));
    m.def("latin_square_mubs", &latin_square_mubs, py::arg("s"));
    m.def("product_mubs", &product_mubs, py::arg("base"));

    m.def("_check_mub", [](const MubSet &s, double tol) { return dumped(check_mub(s, tol)); }, py::arg("set"),
          py::arg("tol") = TOL_MUB);
    m.def("two_design_defect", &two_design_defect, py::arg("set"));
    m.def("fourth_moment", [](const MubSet &s, const Vector &psi) { return fourth_moment(s, as_state(psi)); },
          py::arg("set"), py::arg("psi"));
    m.def(
        "avg_entropy",
        [](const MubSet &s, const Vector &psi, const std::string &kind) {
            if (kind != "shannon" && kind != "renyi2") throw std::invalid_argument("kind must be shannon or renyi2");
            return avg_entropy(s, as_state(psi), kind == "shannon" ? EntropyKind::shannon : EntropyKind::renyi2);
        },
        py::arg("set"), py::arg("psi"), py::arg("kind") = "shannon");
    m.def("avg_entropy_gradient", &avg_entropy_gradient, py::arg("set"), py::arg("x"));

    m.def(
        "_minimize",
        [](const MubSet &s, int restarts, uint64_t seed) {
            MinimizationResult r;
            {
                py::gil_scoped_release release;
                r = minimize_avg_entropy(s, {restarts, seed});
            }
            Json j = to_json(r);
            j["certificate"] = to_json(certify_tightness(s, r));
            return j.dump();
        },
        py::arg("set"), py::arg("restarts") = 64, py::arg("seed") = 0);

    m.def(
        "_iacc_covariant",
        [](const MubSet &s, int restarts, uint64_t seed) {
            py::gil_scoped_release release;
            return dumped(iacc_covariant(s, minimize_avg_entropy(s, {restarts, seed})));
        },
        py::arg("set"), py::arg("restarts") = 64, py::arg("seed") = 0);
    m.def("_iacc_latin", [](const MubSet &s) { return dumped(iacc_latin(s)); }, py::arg("set"));
    m.def(
        "_iacc_search",
        [](const MubSet &s, const std::vector<double> &basis_weights, int restarts, uint64_t seed) {
            Prior p = basis_weights.empty() ? Prior::uniform(s.size(), s.dim())
                                            : Prior::from_basis_weights(basis_weights, s.dim());
            py::gil_scoped_release release;
            return dumped(iacc_lower_search(build_locking_ensemble(s, p), {restarts, seed}));
        },
        py::arg("set"), py::arg("basis_weights") = std::vector<double>{}, py::arg("restarts") = 64,
        py::arg("seed") = 0);
    m.def(
        "_locking_gap",
        [](int n, const std::vector<double> &basis_weights) {
            MubSet q = qubit_triple(n);
            Prior p = basis_weights.empty() ? Prior::uniform(3, q.dim()) : Prior::from_basis_weights(basis_weights, q.dim());
            py::gil_scoped_release release;
            return dumped(locking_gap(build_locking_ensemble(q, p)));
        },
        py::arg("n"), py::arg("basis_weights") = std::vector<double>{});
    m.def(
        "unlocked_info",
        [](const MubSet &s) { return unlocked_info(build_locking_ensemble(s, Prior::uniform(s.size(), s.dim()))); },
        py::arg("set"));
    m.def(
        "bell_mutual_information",
        [](int n) {
            MubSet q = qubit_triple(n);
            return mutual_info_for_measurement(build_locking_ensemble(q, Prior::uniform(3, q.dim())),
                                               Povm::from_basis(bell_basis(n)));
        },
        py::arg("n"));

    py::class_<CriterionResult>(m, "CriterionResult")
        .def_readonly("id", &CriterionResult::id)
        .def_readonly("name", &CriterionResult::name)
        .def_readonly("claim", &CriterionResult::claim)
        .def_readonly("passed", &CriterionResult::passed)
        .def_readonly("detail", &CriterionResult::detail)
        .def_readonly("seconds", &CriterionResult::seconds);
    m.def(
        "run_criterion",
        [](int id) {
            py::gil_scoped_release release;
            return run_criterion(id);
        },
        py::arg("id"));
}
