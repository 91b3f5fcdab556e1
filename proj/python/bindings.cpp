#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "vertalign/earthwork.hpp"
#include "vertalign/generator.hpp"
#include "vertalign/io.hpp"
#include "vertalign/planar_norms.hpp"
#include "vertalign/profile.hpp"
#include "vertalign/projectors.hpp"
#include "vertalign/prox.hpp"
#include "vertalign/solvers.hpp"
#include "vertalign/spline_area.hpp"

namespace py = pybind11;
using namespace vertalign;

namespace {

using Pair = std::pair<double, double>;

PlanarPoint point(Pair p) { return {p.first, p.second}; }
Pair pair(PlanarPoint p) { return {p.x1, p.x2}; }

AreaModel area_model(const Vec& t, const Vec& w, PlanarNorm norm) { return AreaModel(StationVector(t), w, norm); }

}  // namespace

PYBIND11_MODULE(_vertalign, m) {
  m.doc() = "Road vertical alignment: exact-area proximity operators, CycIP and Douglas-Rachford";

  py::enum_<PlanarNorm>(m, "PlanarNorm")
      .value("stadium", PlanarNorm::stadium)
      .value("hexagonal", PlanarNorm::hexagonal)
      .value("l1", PlanarNorm::l1);
  py::enum_<AreaPart>(m, "AreaPart").value("odd", AreaPart::odd).value("even", AreaPart::even);
  py::enum_<Algorithm>(m, "Algorithm")
      .value("cycip", Algorithm::cycip)
      .value("drsb", Algorithm::drsb)
      .value("drhb", Algorithm::drhb)
      .value("drlb", Algorithm::drlb);
  py::enum_<ReflectionConvention>(m, "ReflectionConvention")
      .value("standard", ReflectionConvention::standard)
      .value("printed", ReflectionConvention::printed);

  // Planar norms and dual-ball projectors on (x1, x2) tuples.
  m.def("norm", [](PlanarNorm n, Pair x) { return norm_value(n, point(x)); }, py::arg("norm"), py::arg("x"));
  m.def("dual_norm", [](PlanarNorm n, Pair x) { return dual_norm_value(n, point(x)); }, py::arg("norm"),
        py::arg("x"));
  m.def("stadium_gradient", [](Pair x) { return pair(stadium_gradient(point(x))); }, py::arg("x"));
  m.def("project_dual_ball", [](PlanarNorm n, Pair x) { return pair(project_dual_ball(n, point(x))); },
        py::arg("norm"), py::arg("x"));
  m.def("prox_planar_norm",
        [](PlanarNorm n, double alpha, double gamma, Pair w, Pair x) {
          return pair(prox_planar_norm(n, alpha, gamma, point(w), point(x)));
        },
        py::arg("norm"), py::arg("alpha"), py::arg("gamma"), py::arg("w"), py::arg("x"));
  m.def("prox_planar_norm_conjugate",
        [](PlanarNorm n, double alpha, double gamma, Pair w, Pair x) {
          return pair(prox_planar_norm_conjugate(n, alpha, gamma, point(w), point(x)));
        },
        py::arg("norm"), py::arg("alpha"), py::arg("gamma"), py::arg("w"), py::arg("x"));

  // Splines and areas.
  m.def("weights",
        [](const Vec& t) {
          const AreaWeights a = weights(StationVector(t));
          return py::make_tuple(a.tau, a.eta);
        },
        py::arg("t"), "(tau, eta) area weights");
  m.def("spline_eval", [](const Vec& t, const Vec& x, double s) { return spline_eval(SplineProfile(StationVector(t), x), s); },
        py::arg("t"), py::arg("x"), py::arg("s"));
  m.def("total_area",
        [](const Vec& x, const Vec& w, const Vec& t, PlanarNorm n) { return total_area(x, w, StationVector(t), n); },
        py::arg("x"), py::arg("w"), py::arg("t"), py::arg("norm") = PlanarNorm::stadium);
  m.def("signed_total_area",
        [](const Vec& x, const Vec& w, const Vec& t) { return signed_total_area(x, w, StationVector(t)); },
        py::arg("x"), py::arg("w"), py::arg("t"));
  m.def("prox_area",
        [](const Vec& t, const Vec& w, PlanarNorm n, AreaPart part, double alpha, double gamma, const Vec& x) {
          return prox_area(area_model(t, w, n), part, alpha, gamma, x);
        },
        py::arg("t"), py::arg("w"), py::arg("norm"), py::arg("part"), py::arg("alpha"), py::arg("gamma"),
        py::arg("x"));
  m.def("prox_area_conjugate",
        [](const Vec& t, const Vec& w, PlanarNorm n, AreaPart part, double alpha, double gamma, const Vec& x) {
          return prox_area_conjugate(area_model(t, w, n), part, alpha, gamma, x);
        },
        py::arg("t"), py::arg("w"), py::arg("norm"), py::arg("part"), py::arg("alpha"), py::arg("gamma"),
        py::arg("x"));
  m.def("prox_abs_signed_area",
        [](const Vec& w, const Vec& eta, double alpha, double gamma, const Vec& x) {
          return prox_abs_signed_area(w, eta, alpha, gamma, x);
        },
        py::arg("w"), py::arg("eta"), py::arg("alpha"), py::arg("gamma"), py::arg("x"));

  // Problems.
  py::class_<AlignmentProblem>(m, "AlignmentProblem")
      .def(py::init<>())
      .def_readwrite("name", &AlignmentProblem::name)
      .def_readwrite("seed", &AlignmentProblem::seed)
      .def_readwrite("t", &AlignmentProblem::t)
      .def_readwrite("w", &AlignmentProblem::w)
      .def_readwrite("J", &AlignmentProblem::interp_index)
      .def_readwrite("y", &AlignmentProblem::interp_value)
      .def_readwrite("sigma", &AlignmentProblem::sigma)
      .def_readwrite("delta", &AlignmentProblem::delta)
      .def_readwrite("gamma_c", &AlignmentProblem::gamma_c)
      .def_readwrite("alpha", &AlignmentProblem::alpha)
      .def_readwrite("beta", &AlignmentProblem::beta)
      .def_readwrite("witness", &AlignmentProblem::witness)
      .def_property_readonly("n", &AlignmentProblem::size)
      .def("validate", [](const AlignmentProblem& p) { validate(p); })
      .def("to_json", [](const AlignmentProblem& p) { return problem_to_json(p); })
      .def_static("from_json", &problem_from_json, py::arg("text"))
      .def("__repr__", [](const AlignmentProblem& p) {
        std::ostringstream s;
        s << "<AlignmentProblem '" << p.name << "' n=" << p.size() << " seed=" << p.seed << ">";
        return s.str();
      });
  m.def("load_problem", &load_problem, py::arg("path"));
  m.def("save_problem", &save_problem, py::arg("path"), py::arg("problem"));

  py::class_<GeneratorParams>(m, "GeneratorParams")
      .def(py::init<>())
      .def_readwrite("spacing_min", &GeneratorParams::spacing_min)
      .def_readwrite("spacing_max", &GeneratorParams::spacing_max)
      .def_readwrite("ground_start", &GeneratorParams::ground_start)
      .def_readwrite("ground_grade_max", &GeneratorParams::ground_grade_max)
      .def_readwrite("ground_grade_step", &GeneratorParams::ground_grade_step)
      .def_readwrite("ground_grade_memory", &GeneratorParams::ground_grade_memory)
      .def_readwrite("sigma", &GeneratorParams::sigma)
      .def_readwrite("curvature", &GeneratorParams::curvature)
      .def_readwrite("interior_interpolation", &GeneratorParams::interior_interpolation)
      .def_readwrite("witness_margin", &GeneratorParams::witness_margin)
      .def_readwrite("alpha", &GeneratorParams::alpha)
      .def_readwrite("beta", &GeneratorParams::beta);
  m.def("generate_problem", &generate_problem, py::arg("seed"), py::arg("n"),
        py::arg("params") = GeneratorParams{});

  m.def("feasibility_residual",
        [](const Vec& x, const AlignmentProblem& p) { return feasibility_residual(x, build_six_sets(p)); },
        py::arg("x"), py::arg("problem"));

  py::class_<CostBreakdown>(m, "CostBreakdown")
      .def_readonly("area", &CostBreakdown::area)
      .def_readonly("abs_signed", &CostBreakdown::abs_signed)
      .def_readonly("total", &CostBreakdown::total);
  m.def("exact_cost", [](const Vec& x, const AlignmentProblem& p) { return exact_cost(x, p); }, py::arg("x"),
        py::arg("problem"));
  m.def("mass_diagram",
        [](const Vec& x, const Vec& w, const Vec& t) {
          const MassSeries s = mass_diagram(x, w, t);
          return py::make_tuple(s.station, s.signed_cumulative, s.abs_cumulative);
        },
        py::arg("x"), py::arg("w"), py::arg("t"), "(station, signed_cum, abs_cum)");

  // Solvers.
  py::class_<SolverConfig>(m, "SolverConfig")
      .def(py::init<>())
      .def_readwrite("gamma", &SolverConfig::gamma)
      .def_readwrite("eps", &SolverConfig::eps)
      .def_readwrite("k_max", &SolverConfig::k_max)
      .def_readwrite("variant", &SolverConfig::variant)
      .def_readwrite("alpha", &SolverConfig::alpha)
      .def_readwrite("beta", &SolverConfig::beta)
      .def_readwrite("reflection", &SolverConfig::reflection)
      .def_readwrite("cycip_order", &SolverConfig::cycip_order)
      .def("validate", &SolverConfig::validate);
  py::class_<SolverReport>(m, "SolverReport")
      .def_readonly("x_final", &SolverReport::x_final)
      .def_readonly("iterations", &SolverReport::iterations)
      .def_readonly("residual", &SolverReport::residual)
      .def_readonly("cost", &SolverReport::cost)
      .def_readonly("converged", &SolverReport::converged)
      .def_readonly("wall_time_seconds", &SolverReport::wall_time_seconds);
  m.def("solve", &solve, py::arg("problem"), py::arg("algorithm"), py::arg("config") = SolverConfig{},
        py::call_guard<py::gil_scoped_release>());
  m.def("saving_ratio", &saving_ratio, py::arg("f_cycip"), py::arg("f_dr"));

  py::class_<ProfileRun>(m, "ProfileRun")
      .def(py::init([](std::string a, std::size_t p, std::size_t k, bool solved) {
             return ProfileRun{std::move(a), p, k, solved};
           }),
           py::arg("algorithm"), py::arg("problem"), py::arg("iterations"), py::arg("solved"))
      .def_readonly("algorithm", &ProfileRun::algorithm)
      .def_readonly("problem", &ProfileRun::problem)
      .def_readonly("iterations", &ProfileRun::iterations)
      .def_readonly("solved", &ProfileRun::solved);
  m.def(
      "performance_profile",
      [](const std::vector<ProfileRun>& runs, const std::vector<double>& kappas) {
        const ProfileTable t = performance_profile(runs, kappas);
        py::dict out;
        for (std::size_t a = 0; a < t.algorithms.size(); ++a) out[py::str(t.algorithms[a])] = t.rho[a];
        return out;
      },
      py::arg("runs"), py::arg("kappas"), "{algorithm: [rho(kappa) for kappa in kappas]}");
}
