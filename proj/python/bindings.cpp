#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nikitin/analytic.hpp"
#include "nikitin/errors.hpp"
#include "nikitin/oracle.hpp"
#include "nikitin/rabi.hpp"
#include "nikitin/selftest.hpp"
#include "nikitin/specfun.hpp"
#include "nikitin/spectrum.hpp"
#include "nikitin/sweep.hpp"
#include "nikitin/version.hpp"

namespace py = pybind11;
using namespace nikitin;

namespace {

py::list matrix_rows(const PropagatorMatrix& u) {
  py::list rows;
  rows.append(py::make_tuple(u.u11, u.u12));
  rows.append(py::make_tuple(u.u21, u.u22));
  return rows;
}

py::dict dataset_dict(const sweep::Dataset& ds) {
  py::dict d;
  d["columns"] = ds.columns;
  d["rows"] = ds.rows;
  d["provenance"] = ds.provenance.dump();
  return d;
}

}  // namespace

PYBIND11_MODULE(_nikitin, m) {
  m.attr("__version__") = std::string(kVersion);

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<AccuracyError>(m, "AccuracyError", PyExc_RuntimeError);
  py::register_exception<OverflowError>(m, "ExponentOverflowError", PyExc_ArithmeticError);
  py::register_exception<DegeneracyError>(m, "DegeneracyError", PyExc_ArithmeticError);
  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);

  py::class_<model::ModelParams>(m, "ModelParams")
      .def(py::init([](double A, double alpha, double beta, double epsilon, double Delta, double t0, double t1) {
             model::ModelParams p{A, alpha, beta, epsilon, Delta, t0, t1};
             p.validate();
             return p;
           }),
           py::arg("A") = 0.0, py::arg("alpha") = 1.0, py::arg("beta") = 0.0, py::arg("epsilon") = 0.0,
           py::arg("Delta") = 0.0, py::arg("t0") = 0.0, py::arg("t1") = 1.0)
      .def_readwrite("A", &model::ModelParams::A)
      .def_readwrite("alpha", &model::ModelParams::alpha)
      .def_readwrite("beta", &model::ModelParams::beta)
      .def_readwrite("epsilon", &model::ModelParams::epsilon)
      .def_readwrite("Delta", &model::ModelParams::Delta)
      .def_readwrite("t0", &model::ModelParams::t0)
      .def_readwrite("t1", &model::ModelParams::t1)
      .def("to_json", [](const model::ModelParams& p) { return model::to_json(p); })
      .def_static("from_json", &model::from_json)
      .def("__repr__", [](const model::ModelParams& p) { return "ModelParams(" + model::to_json(p) + ")"; });

  m.def("derived_params", [](const model::ModelParams& p) {
    const model::DerivedParams d = model::derived_params(p);
    py::dict out;
    out["a"] = d.a;
    out["b"] = d.b;
    out["c"] = d.c;
    out["mu1"] = d.mu1;
    out["mu2"] = d.mu2;
    out["gamma"] = d.gamma;
    out["lambda"] = d.lambda;
    return out;
  });
  m.def("hamiltonian", [](const model::ModelParams& p, double t) {
    const Matrix2 h = model::hamiltonian(p, t);
    return py::make_tuple(py::make_tuple(h.m00, h.m01), py::make_tuple(h.m10, h.m11));
  });
  m.def("omega_integral", &model::omega_integral);

  m.def("propagator",
        [](const model::ModelParams& p, double t0, double t) { return matrix_rows(analytic::propagator(p, t0, t)); },
        py::arg("params"), py::arg("t0"), py::arg("t"));
  m.def("amplitudes",
        [](const model::ModelParams& p, Complex c1, Complex c2, double t0, double t) {
          const AmplitudePair a = analytic::amplitudes(p, {c1, c2, t0}, t);
          return py::make_tuple(a.c1, a.c2);
        },
        py::arg("params"), py::arg("c1"), py::arg("c2"), py::arg("t0"), py::arg("t"));
  m.def("populations",
        [](const model::ModelParams& p, double t0, double t) {
          const analytic::PopulationRecord r = analytic::populations(p, t0, t);
          py::dict out;
          out["p12_reim"] = r.p12_reim;
          out["p22_reim"] = r.p22_reim;
          out["p12_mod2"] = r.p12_mod2;
          out["p22_mod2"] = r.p22_mod2;
          out["norm"] = r.norm;
          return out;
        },
        py::arg("params"), py::arg("t0"), py::arg("t"));

  m.def("numerical_propagator",
        [](const model::ModelParams& p, double t0, double t, double rel_tol, double abs_tol) {
          oracle::IntegratorConfig cfg;
          cfg.rel_tol = rel_tol;
          cfg.abs_tol = abs_tol;
          return matrix_rows(oracle::numerical_propagator(p, t0, t, cfg));
        },
        py::arg("params"), py::arg("t0"), py::arg("t"), py::arg("rel_tol") = 1e-10, py::arg("abs_tol") = 1e-12);

  m.def("eigenvalues", [](const model::ModelParams& p, double t) { return spectrum::eigenvalues_direct(p, t); });
  m.def("eigenvalues_closed_form",
        [](const model::ModelParams& p, double t) { return spectrum::eigenvalues_closed_form(p, t); });

  m.def("kummer_m", [](Complex mu, Complex gamma, Complex z) { return specfun::kummer_m({mu, gamma, z}); });
  m.def("tricomi_u", [](Complex mu, Complex gamma, Complex z) { return specfun::tricomi_u({mu, gamma, z}); });
  m.def("ln_gamma", &specfun::ln_gamma);
  m.def("wronskian_residual",
        [](Complex mu, Complex gamma, Complex z) { return specfun::wronskian_residual({mu, gamma, z}); });

  m.def("rabi_closed_form", [](double epsilon, double Delta, double t) {
    return rabi::rabi_survival_closed_form({epsilon, Delta, t}).value;
  });
  m.def("rabi_oracle", [](double epsilon, double Delta, double t) {
    const rabi::RabiPopulations r = rabi::rabi_survival_oracle({epsilon, Delta, t});
    return py::make_tuple(r.survival_mod2, r.transition_mod2);
  });

  m.def("run_sweep", [](const std::string& config_json) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(config_json);
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("malformed sweep config: ") + e.what());
    }
    const sweep::SweepConfig cfg = sweep::SweepConfig::from_json(j);
    sweep::Dataset ds;
    {
      py::gil_scoped_release release;
      ds = sweep::run_sweep(cfg);
    }
    return dataset_dict(ds);
  });

  m.def("selftest", [] {
    std::ostringstream os;
    const bool ok = selftest(os);
    return py::make_tuple(ok, os.str());
  });
}
