#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ptweyl/cli/checks.hpp"
#include "ptweyl/cli/commands.hpp"
#include "ptweyl/ptweyl.hpp"

namespace py = pybind11;
using namespace ptweyl;

namespace {

using CArray = py::array_t<cplx>;
using RArray = py::array_t<double, py::array::c_style | py::array::forcecast>;

template <class F>
CArray map_x(const RArray &xs, F f) {
  auto in = xs.unchecked<1>();
  CArray out(in.shape(0));
  auto o = out.mutable_unchecked<1>();
  for (py::ssize_t i = 0; i < in.shape(0); ++i) o(i) = f(in(i));
  return out;
}

Branch branch_arg(const std::string &s) { return branch_from_string(s); }

} // namespace

PYBIND11_MODULE(_ptweyl, m) {
  m.doc() = "PT-symmetric Dirac-Weyl models in hyperbolic magnetic fields";

  py::register_exception<Error>(m, "PtweylError", PyExc_RuntimeError);
  py::register_exception<InvalidModel>(m, "InvalidModel", PyExc_ValueError);
  py::register_exception<SingularVelocity>(m, "SingularVelocity", PyExc_ValueError);

  py::class_<ScarfModel>(m, "ScarfModel")
      .def(py::init([](double a, double mu) {
             ScarfModel s{a, mu};
             s.validate();
             return s;
           }),
           py::arg("a") = 1.0, py::arg("mu") = 1.0)
      .def_readonly("a", &ScarfModel::a)
      .def_readonly("mu", &ScarfModel::mu)
      .def("v1", [](const ScarfModel &s, const RArray &x) {
        return map_x(x, [&](double y) { return scarf2_potentials(s, y).first; });
      })
      .def("v2", [](const ScarfModel &s, const RArray &x) {
        return map_x(x, [&](double y) { return scarf2_potentials(s, y).second; });
      })
      .def("magnetic_field", [](const ScarfModel &s, const RArray &x) {
        return map_x(x, [&](double y) { return cplx(magnetic_field(s, y)); });
      });

  py::class_<NUProblem>(m, "NUProblem")
      .def(py::init(&NUProblem::from_couplings), py::arg("A1"), py::arg("A2"), py::arg("mu") = 1.0)
      .def_readonly("a1", &NUProblem::a1)
      .def_readonly("a2", &NUProblem::a2)
      .def_readonly("mu", &NUProblem::mu)
      .def("potential", [](const NUProblem &p, const RArray &x) { return map_x(x, [&](double y) { return p.potential(y); }); })
      .def("energy", [](const NUProblem &p, const std::string &b, int n) { return nu_energy(p, branch_arg(b), n); },
           py::arg("branch"), py::arg("n"))
      .def("energy_closed_form",
           [](const NUProblem &p, const std::string &b, int n) { return nu_energy_closed_form(p, branch_arg(b), n); },
           py::arg("branch"), py::arg("n"))
      .def("normalizable_levels", [](const NUProblem &p, const std::string &b) { return normalizable_levels(p, branch_arg(b)); })
      .def("marginal_level", [](const NUProblem &p, const std::string &b) { return marginal_level(p, branch_arg(b)); })
      .def("eigenfunction",
           [](const NUProblem &p, const std::string &b, int n, const RArray &x) {
             const auto f = nu_eigenfunction(p, branch_arg(b), n);
             return map_x(x, [&](double y) { return f(y); });
           },
           py::arg("branch"), py::arg("n"), py::arg("x"));

  m.def("dirac_energy", &dirac_energy, py::arg("e"), py::arg("v_f") = 1.0, py::arg("imaginary_vf") = false);

  py::class_<IntertwinerCoeffs>(m, "IntertwinerCoeffs")
      .def_readonly("b1", &IntertwinerCoeffs::b1)
      .def_readonly("b2", &IntertwinerCoeffs::b2)
      .def_readonly("s", &IntertwinerCoeffs::s)
      .def_readonly("residual_product", &IntertwinerCoeffs::residual_product)
      .def_readonly("residual_sum", &IntertwinerCoeffs::residual_sum)
      .def_readonly("degenerate", &IntertwinerCoeffs::degenerate);
  m.def("solve_constraints", &solve_bs_constraints, py::arg("a"), py::arg("mu"));
  m.def("u_family",
        [](double b1, double s, double a, double mu, const RArray &x) {
          const auto c = make_coeffs(b1, s, a, mu);
          return map_x(x, [&](double y) { return u_family(c, a, mu, y); });
        },
        py::arg("b1"), py::arg("s"), py::arg("a"), py::arg("mu"), py::arg("x"));

  m.def(
      "bound_spectrum",
      [](const std::function<cplx(double)> &u, double l, int n, int order) {
        OracleOptions o;
        o.order = order;
        return bound_spectrum(u, Grid(l, n), o);
      },
      py::arg("potential"), py::arg("l") = 15.0, py::arg("n") = 3001, py::arg("order") = 2,
      "Bound eigenvalues of -d^2/dx^2 + U on [-l, l] with Dirichlet ends.");

  m.def(
      "eff_potential",
      [](const std::string &kind, double alpha, double beta, double mu, int which, const RArray &x,
         const std::string &form) {
        const auto ans = constrained_ansatz(ansatz_kind_from_string(kind), alpha, beta, mu);
        return map_x(x, [&](double y) {
          if (form == "simplified") return eff_potential_simplified(ans, which, y);
          if (form == "quoted") return eff_potential_quoted_full(ans, y);
          return eff_potential_definitional(ans, which, y);
        });
      },
      py::arg("kind"), py::arg("alpha"), py::arg("beta"), py::arg("mu"), py::arg("which"), py::arg("x"),
      py::arg("form") = "definitional");

  m.def(
      "run_check",
      [](const std::string &name, double a, double mu) {
        cli::RunConfig cfg;
        cfg.command = "verify";
        cfg.a = a;
        cfg.mu = mu;
        const auto r = cli::run_check(name, cfg);
        py::dict d;
        d["name"] = r.name;
        d["pass"] = r.pass;
        d["values"] = r.values;
        d["convergence_ratios"] = r.convergence_ratios;
        return d;
      },
      py::arg("name"), py::arg("a") = 1.0, py::arg("mu") = 1.0);

  m.def(
      "cli",
      [](const std::vector<std::string> &args) {
        std::vector<const char *> argv{"ptweyl"};
        for (const auto &s : args) argv.push_back(s.c_str());
        std::ostringstream out, err;
        const int code = cli::main_entry(int(argv.size()), argv.data(), out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
