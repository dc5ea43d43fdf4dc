#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mqrot/heun.hpp"
#include "mqrot/model.hpp"
#include "mqrot/oracle.hpp"
#include "mqrot/quantize.hpp"

namespace py = pybind11;
using namespace mqrot;

PYBIND11_MODULE(_mqrot, m) {
    m.doc() = "Quantized spectra of a rotating magnetic-quadrupole atom "
              "with an inverse-radial potential";

    py::class_<PhysicalParams>(m, "PhysicalParams")
        .def(py::init([](double mass, double M_quad, double lam, double Omega,
                         double theta) {
                 PhysicalParams p{mass, M_quad, lam, Omega, theta};
                 p.validate();
                 return p;
             }),
             py::arg("m") = 1.0, py::arg("M_quad") = 1.0, py::arg("lam") = 0.0,
             py::arg("Omega") = 0.0, py::arg("theta") = 0.0)
        .def_readonly("m", &PhysicalParams::m)
        .def_readonly("M_quad", &PhysicalParams::M_quad)
        .def_readonly("lam", &PhysicalParams::lambda)
        .def_readonly("Omega", &PhysicalParams::Omega)
        .def_readonly("theta", &PhysicalParams::theta_pot);

    py::class_<QuantizedMode>(m, "QuantizedMode")
        .def_readonly("n", &QuantizedMode::n)
        .def_readonly("l", &QuantizedMode::l)
        .def_readonly("root_index", &QuantizedMode::root_index)
        .def_readonly("branch", &QuantizedMode::branch)
        .def_readonly("xi_star", &QuantizedMode::xi_star)
        .def_readonly("delta", &QuantizedMode::delta)
        .def_readonly("omega", &QuantizedMode::omega)
        .def_readonly("energy", &QuantizedMode::energy)
        .def_readonly("degenerate", &QuantizedMode::degenerate)
        .def("__repr__", [](const QuantizedMode& q) {
            return "QuantizedMode(n=" + std::to_string(q.n) +
                   ", l=" + std::to_string(q.l) +
                   ", root_index=" + std::to_string(q.root_index) +
                   ", branch=" + std::string(q.branch > 0 ? "+" : "-") +
                   ", omega=" + std::to_string(q.omega) +
                   ", energy=" + std::to_string(q.energy) + ")";
        });

    py::class_<SeriesCoefficients>(m, "SeriesCoefficients")
        .def_readonly("l_abs", &SeriesCoefficients::l_abs)
        .def_readonly("xi", &SeriesCoefficients::xi)
        .def_readonly("Lambda", &SeriesCoefficients::Lambda)
        .def_readonly("coeffs", &SeriesCoefficients::coeffs);

    py::class_<GridSpec>(m, "GridSpec")
        .def(py::init<double, int>(), py::arg("r_max") = 10.0,
             py::arg("n_points") = 4000)
        .def_readwrite("r_max", &GridSpec::r_max)
        .def_readwrite("n_points", &GridSpec::n_points);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("n", &VerificationReport::n)
        .def_readonly("l", &VerificationReport::l)
        .def_readonly("xi_star", &VerificationReport::xi_star)
        .def_readonly("Lambda_analytic", &VerificationReport::Lambda_analytic)
        .def_readonly("Lambda_numeric", &VerificationReport::Lambda_numeric)
        .def_readonly("eigenindex", &VerificationReport::eigenindex)
        .def_readonly("node_count", &VerificationReport::node_count)
        .def_readonly("abs_error", &VerificationReport::abs_error)
        .def_readonly("richardson_error_estimate",
                      &VerificationReport::richardson_error_estimate)
        .def_readonly("passed", &VerificationReport::passed);

    m.def("cyclotron_frequency", &cyclotron_frequency, py::arg("params"));
    m.def("effective_field", &effective_field, py::arg("params"));
    m.def("delta_from_omega", &delta_from_omega, py::arg("params"), py::arg("omega"));
    m.def("theta_capital", &theta_capital, py::arg("params"), py::arg("E"),
          py::arg("l"), py::arg("omega"));
    m.def("xi_coupling", &xi_coupling, py::arg("params"), py::arg("delta"));

    m.def("coefficients", &coefficients, py::arg("l_abs"), py::arg("xi"),
          py::arg("Lambda"), py::arg("K"));
    m.def("termination_residual", &termination_residual, py::arg("n"),
          py::arg("l_abs"), py::arg("xi"));
    m.def("eval_radial", &eval_radial, py::arg("series"), py::arg("r"),
          py::arg("n_trunc"));

    m.def("constraint_polynomial_coeffs",
          [](int n, int l_abs) { return constraint_polynomial(n, l_abs).poly_coeffs; },
          py::arg("n"), py::arg("l_abs"));
    m.def("solve_xi", &solve_xi, py::arg("n"), py::arg("l_abs"));
    m.def("omega_from_root", &omega_from_root, py::arg("params"), py::arg("xi_star"));
    m.def("energy_general", &energy_general, py::arg("n"), py::arg("l"),
          py::arg("omega"), py::arg("Omega"));
    m.def("closed_form_n1", &closed_form_n1, py::arg("params"), py::arg("l"));
    m.def("closed_form_n2", &closed_form_n2, py::arg("params"), py::arg("l"));
    m.def("solve_level", &solve_level, py::arg("params"), py::arg("n"), py::arg("l"));
    m.def("landau_limit", &landau_limit, py::arg("params"), py::arg("n_r"),
          py::arg("l"), py::arg("omega"));

    m.def("lowest_eigenvalues",
          [](int l_abs, double xi, const GridSpec& g, int k) {
              return lowest_eigenvalues(build_operator(l_abs, xi, g), k);
          },
          py::arg("l_abs"), py::arg("xi"), py::arg("grid"), py::arg("k"));
    m.def("lowest_eigenvalues_extrapolated", &lowest_eigenvalues_extrapolated,
          py::arg("l_abs"), py::arg("xi"), py::arg("grid"), py::arg("k"));
    m.def("verify_mode", &verify_mode, py::arg("mode"), py::arg("grid"),
          py::arg("rel_tolerance") = 1e-4);
}
