// pybind11 bindings exposing the main operations of the toolkit.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gyrostab/cli.hpp"
#include "gyrostab/selfcheck.hpp"
#include "gyrostab/simulator.hpp"

namespace py = pybind11;
using namespace gyrostab;

namespace {

Vec3 to_vec3(const std::array<double, 3>& a) { return {a[0], a[1], a[2]}; }
std::array<double, 3> from_vec3(const Vec3& v) { return {v.x, v.y, v.z}; }

GyrostatParams make_params(const std::array<double, 3>& inertia,
                           const std::array<double, 3>& mu) {
    return GyrostatParams(InertiaSpectrum(inertia[0], inertia[1], inertia[2]), to_vec3(mu));
}

}  // namespace

PYBIND11_MODULE(_gyrostab, m) {
    m.doc() = "Stability analysis of uniform rotations of a torque-free gyrostat";

    py::class_<GyrostatParams>(m, "GyrostatParams")
        .def(py::init(&make_params), py::arg("inertia"), py::arg("mu"))
        .def_property_readonly("inertia",
                               [](const GyrostatParams& p) {
                                   return std::array<double, 3>{p.inertia().i1(),
                                                                p.inertia().i2(),
                                                                p.inertia().i3()};
                               })
        .def_property_readonly("mu",
                               [](const GyrostatParams& p) { return from_vec3(p.mu()); });

    py::class_<EquilibriumFamily>(m, "EquilibriumFamily")
        .def_property_readonly("name",
                               [](const EquilibriumFamily& f) {
                                   return std::string(family_name(f.tag));
                               })
        .def_readonly("axis", &EquilibriumFamily::axis);

    py::class_<Equilibrium>(m, "Equilibrium")
        .def_readonly("family", &Equilibrium::family)
        .def_readonly("parameter", &Equilibrium::parameter)
        .def_property_readonly("point",
                               [](const Equilibrium& e) { return from_vec3(e.point.m); });

    py::class_<StabilityReport>(m, "StabilityReport")
        .def_property_readonly("closed_form",
                               [](const StabilityReport& r) {
                                   return std::string(closed_form_name(r.closed_form));
                               })
        .def_property_readonly("isolation",
                               [](const StabilityReport& r) {
                                   return std::string(isolation_name(r.isolation.verdict));
                               })
        .def_property_readonly("case_tag",
                               [](const StabilityReport& r) {
                                   return std::string(case_tag_name(r.isolation.case_tag));
                               })
        .def_property_readonly("max_real_eig",
                               [](const StabilityReport& r) { return r.spectral.max_real; })
        .def_property_readonly(
            "eigenvalues",
            [](const StabilityReport& r) {
                return std::vector<std::complex<double>>(r.spectral.eigenvalues.begin(),
                                                         r.spectral.eigenvalues.end());
            })
        .def_readonly("singular_case", &StabilityReport::singular_case)
        .def_property_readonly("lyapunov", [](const StabilityReport& r) {
            return std::string(lyapunov_name(r.lyapunov));
        });

    py::class_<EscapeResult>(m, "EscapeResult")
        .def_readonly("escaped", &EscapeResult::escaped)
        .def_readonly("escape_time", &EscapeResult::escape_time)
        .def_readonly("max_deviation", &EscapeResult::max_deviation)
        .def_readonly("threshold_x", &EscapeResult::threshold_x);

    m.def("rhs",
          [](const GyrostatParams& p, const std::array<double, 3>& m2) {
              return from_vec3(rhs(p, {to_vec3(m2)}));
          },
          py::arg("params"), py::arg("m"));
    m.def("f1",
          [](const GyrostatParams& p, const std::array<double, 3>& m2) {
              return f1(p, {to_vec3(m2)});
          });
    m.def("f2", [](const GyrostatParams& p, const std::array<double, 3>& m2) {
        return f2(p, {to_vec3(m2)});
    });

    m.def("enumerate_families", &enumerate_families);
    m.def("family_point",
          [](const GyrostatParams& p, const std::string& name, double param) {
              cli::RunConfig cfg;
              cfg.family = name;
              cfg.parameter = param;
              return cli::equilibrium_from(cfg, p);
          },
          py::arg("params"), py::arg("family"), py::arg("parameter") = 0.0);
    m.def("is_equilibrium",
          [](const GyrostatParams& p, const std::array<double, 3>& m2, double tol) {
              return is_equilibrium(p, {to_vec3(m2)}, tol);
          },
          py::arg("params"), py::arg("m"), py::arg("tol") = 1e-10);

    m.def("classify",
          [](const GyrostatParams& p, const Equilibrium& e) { return synthesize(p, e); },
          py::arg("params"), py::arg("equilibrium"));
    m.def("singular_points", &singular_points);

    m.def("integrate",
          [](const GyrostatParams& p, const std::array<double, 3>& m0, double dt,
             double t_end) {
              const Trajectory t = integrate(p, {to_vec3(m0)}, dt, t_end);
              std::vector<std::array<double, 3>> states;
              states.reserve(t.states.size());
              for (const auto& s : t.states) states.push_back(from_vec3(s.m));
              return py::make_tuple(t.times, states, t.drift());
          },
          py::arg("params"), py::arg("initial"), py::arg("dt") = 1e-3,
          py::arg("t_end") = 100.0);

    m.def("escape_experiment", &escape_experiment, py::arg("params"),
          py::arg("equilibrium"), py::arg("delta"), py::arg("dt"), py::arg("t_max"),
          py::arg("escape_radius"));

    m.def("scan_csv",
          [](const std::string& config_text) {
              return cli::scan_csv(cli::parse_config(config_text));
          },
          py::arg("config_text"));

    m.def("selfcheck", [](const GyrostatParams& p) {
        const SelfcheckResult r = run_selfcheck(p);
        return py::make_tuple(r.passed, r.failed, r.failures);
    });
}
