// Copyright 2026 The dlab Authors
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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "dlab/bounds.hpp"
#include "dlab/cli.hpp"
#include "dlab/dataset.hpp"
#include "dlab/dla.hpp"
#include "dlab/errors.hpp"
#include "dlab/experiments.hpp"
#include "dlab/pauli.hpp"
#include "dlab/simulator.hpp"
#include "dlab/training.hpp"

namespace py = pybind11;

namespace {

dlab::Boundary boundary_arg(const std::string& s) {
  return dlab::parse_boundary(s);
}

py::dict record_dict(const dlab::ExperimentRecord& r) {
  py::dict d;
  d["n"] = r.n;
  d["boundary"] = std::string(dlab::to_string(r.boundary));
  d["algo"] = std::string(dlab::to_string(r.algorithm));
  d["dataset_seed"] = r.dataset_seed;
  d["train_seed"] = r.train_seed;
  d["dim_g"] = r.dim_g;
  d["theta_star"] = r.theta_star;
  d["train_rmse"] = r.train_rmse;
  d["test_rmse"] = r.test_rmse;
  d["gap_rmse"] = r.gap_rmse;
  d["gap_mse"] = r.gap_mse;
  d["cr"] = r.cr;
  d["p_max"] = r.p_max;
  d["n_max"] = r.n_max;
  d["status"] = r.status;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "DLA closure, generalization bounds and QNN experiments";
  m.attr("__version__") = DLAB_VERSION;

  py::register_exception<dlab::DomainError>(m, "DomainError",
                                            PyExc_ValueError);
  py::register_exception<dlab::CapacityError>(m, "CapacityError",
                                              PyExc_ValueError);
  py::register_exception<dlab::NumericalError>(m, "NumericalError",
                                               PyExc_ArithmeticError);

  py::class_<dlab::PauliSum>(m, "PauliSum")
      .def(py::init<int>(), py::arg("num_qubits"))
      .def_static("from_word", &dlab::PauliSum::from_word, py::arg("letters"),
                  py::arg("coeff") = 1.0)
      .def_static("from_text", &dlab::PauliSum::from_text, py::arg("text"),
                  py::arg("num_qubits") = 0)
      .def("to_text", &dlab::PauliSum::to_text)
      .def_property_readonly("num_qubits", &dlab::PauliSum::num_qubits)
      .def("terms",
           [](const dlab::PauliSum& s) {
             py::dict d;
             for (const auto& [w, c] : s.terms()) d[py::str(w.str())] = c;
             return d;
           })
      .def("norm", &dlab::PauliSum::norm)
      .def("__len__", &dlab::PauliSum::size)
      .def("__add__", [](const dlab::PauliSum& a,
                         const dlab::PauliSum& b) { return a + b; })
      .def("__sub__", [](const dlab::PauliSum& a,
                         const dlab::PauliSum& b) { return a - b; })
      .def("__mul__", [](const dlab::PauliSum& a, double s) { return a * s; })
      .def("__rmul__", [](const dlab::PauliSum& a, double s) { return a * s; })
      .def("__eq__", [](const dlab::PauliSum& a,
                        const dlab::PauliSum& b) { return a == b; })
      .def("__repr__", [](const dlab::PauliSum& s) {
        return "PauliSum(" + std::to_string(s.num_qubits()) + " qubits, " +
               std::to_string(s.size()) + " terms)";
      });

  m.def("commutator", &dlab::commutator, py::arg("a"), py::arg("b"));
  m.def("hs_inner", &dlab::hs_inner, py::arg("a"), py::arg("b"));

  m.def(
      "dla_dimension",
      [](const std::vector<dlab::PauliSum>& gens, int max_dim) {
        if (gens.empty()) throw dlab::DomainError("no generators");
        dlab::GeneratorSet set{gens.front().num_qubits(), gens, {}};
        return dlab::lie_closure(set, max_dim).dim;
      },
      py::arg("generators"), py::arg("max_dim") = 0);
  m.def(
      "lie_closure",
      [](const std::vector<dlab::PauliSum>& gens, int max_dim) {
        if (gens.empty()) throw dlab::DomainError("no generators");
        dlab::GeneratorSet set{gens.front().num_qubits(), gens, {}};
        return dlab::lie_closure(set, max_dim).basis;
      },
      py::arg("generators"), py::arg("max_dim") = 0);
  m.def(
      "tfim_generators",
      [](int n, const std::string& b) {
        return dlab::tfim_generators(n, boundary_arg(b)).generators;
      },
      py::arg("n"), py::arg("boundary") = "open");
  m.def(
      "tfim_hamiltonian",
      [](int n, const std::string& b) {
        return dlab::tfim_hamiltonian(n, boundary_arg(b));
      },
      py::arg("n"), py::arg("boundary") = "open");
  m.def(
      "tfim_dimension",
      [](int n, const std::string& b) {
        return dlab::dla_dimension(dlab::tfim_generators(n, boundary_arg(b)));
      },
      py::arg("n"), py::arg("boundary") = "open");

  m.def(
      "generalization_bound",
      [](std::int64_t m_samples, std::int64_t n_t, std::int64_t dim_g,
         int n_qubits, double o_norm, double c, double delta) {
        auto in = dlab::BoundInputs::for_qubits(m_samples, n_t, dim_g,
                                                n_qubits, o_norm, c, delta);
        auto r = dlab::generalization_bound(in);
        py::dict d;
        d["D"] = r.D;
        d["alpha"] = r.alpha;
        d["dudley_term"] = r.dudley_term;
        d["rademacher_bound"] = r.rademacher_bound;
        d["gap_bound"] = r.gap_bound;
        return d;
      },
      py::arg("m"), py::arg("n_t"), py::arg("dim_g"), py::arg("n_qubits"),
      py::arg("o_norm") = 1.0, py::arg("c") = 1.0, py::arg("delta") = 0.05);
  m.def("dudley_closed_form", &dlab::dudley_closed_form, py::arg("alpha"),
        py::arg("D"));
  m.def("max_trainable_params", &dlab::max_trainable_params, py::arg("p"));
  m.def("epsilon_max", &dlab::epsilon_max, py::arg("p"));
  m.def("optimal_p", [] {
    auto b = dlab::optimal_p();
    return py::make_tuple(b.p_star, b.n_star);
  });
  m.def("theta_max", &dlab::theta_max, py::arg("h"));

  m.def(
      "model_output",
      [](const std::vector<double>& x, const std::vector<double>& theta, int n,
         const std::string& b, int layers, int reps) {
        auto model = dlab::QnnModel::tfim(n, boundary_arg(b), layers, reps);
        return dlab::model_output(x, theta, model);
      },
      py::arg("x"), py::arg("theta"), py::arg("n"),
      py::arg("boundary") = "open", py::arg("layers") = 2,
      py::arg("reps") = 10);

  m.def(
      "generate_dataset",
      [](int n, std::uint64_t seed, int m_train, int m_test) {
        return dlab::generate_dataset(n, seed, m_train, m_test).to_json();
      },
      py::arg("n"), py::arg("seed"), py::arg("m_train") = 10,
      py::arg("m_test") = 100, "Dataset as a JSON string.");

  m.def(
      "run_single",
      [](int n, const std::string& b, const std::string& algo,
         std::uint64_t dataset_seed, std::uint64_t train_seed, int epochs) {
        dlab::ExperimentConfig cfg;
        cfg.train.epochs = epochs;
        auto rec = dlab::run_single(n, boundary_arg(b),
                                    dlab::parse_algorithm(algo), dataset_seed,
                                    train_seed, cfg);
        return record_dict(rec);
      },
      py::arg("n"), py::arg("boundary"), py::arg("algo"),
      py::arg("dataset_seed"), py::arg("train_seed"), py::arg("epochs") = 200);

  m.def(
      "compute_cr",
      [](const std::vector<double>& theta, double h_norm) {
        return dlab::compute_cr(theta, h_norm);
      },
      py::arg("theta"), py::arg("h_norm"));
  m.def(
      "compute_pmax_nmax",
      [](const std::vector<double>& theta, double h_norm) {
        auto r = dlab::compute_pmax_nmax(theta, h_norm);
        return py::make_tuple(r.p_max, r.n_max);
      },
      py::arg("theta"), py::arg("h_norm"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::vector<const char*> argv{"dlab"};
        for (const auto& a : args) argv.push_back(a.c_str());
        std::ostringstream out, err;
        int code;
        {
          py::gil_scoped_release release;
          code = dlab::cli::run_cli(static_cast<int>(argv.size()), argv.data(),
                                    out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the CLI in-process; returns (code, stdout, stderr).");
}
