#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "shafer/analysis.hpp"
#include "shafer/bounds.hpp"
#include "shafer/errors.hpp"
#include "shafer/grid.hpp"
#include "shafer/oracle.hpp"
#include "shafer/proof_aux.hpp"
#include "shafer/verify.hpp"

namespace py = pybind11;
using namespace shafer;

namespace {

GridSpec make_grid(std::size_t n_uniform, bool log_points) {
    GridSpec g = log_points ? GridSpec{} : GridSpec::uniform(n_uniform);
    g.n_uniform = n_uniform;
    return g;
}

}  // namespace

PYBIND11_MODULE(_shafer, m) {
    m.doc() = "Certified arcsin enclosures from the Shafer bound family";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<PoleError>(m, "PoleError", PyExc_ArithmeticError);
    py::register_exception<RegimeError>(m, "RegimeError", PyExc_ValueError);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

    py::enum_<Regime>(m, "Regime")
        .value("StrictlyIncreasing", Regime::StrictlyIncreasing)
        .value("StrictlyDecreasing", Regime::StrictlyDecreasing)
        .value("UniqueMinimum", Regime::UniqueMinimum);

    py::enum_<BoundConstant>(m, "BoundConstant")
        .value("AtZero", BoundConstant::AtZero)
        .value("AtOne", BoundConstant::AtOne)
        .value("MidMax", BoundConstant::MidMax);

    py::class_<BoundSource>(m, "BoundSource")
        .def_readonly("regime", &BoundSource::regime)
        .def_readonly("constant", &BoundSource::constant);

    py::class_<Enclosure>(m, "Enclosure")
        .def_readonly("lower", &Enclosure::lower)
        .def_readonly("upper", &Enclosure::upper)
        .def_readonly("lower_source", &Enclosure::lower_source)
        .def_readonly("upper_source", &Enclosure::upper_source)
        .def_property_readonly("two_sided", &Enclosure::two_sided);

    py::class_<BoundConstants>(m, "BoundConstants")
        .def_readonly("at_zero", &BoundConstants::at_zero)
        .def_readonly("at_one", &BoundConstants::at_one)
        .def_readonly("mid_max", &BoundConstants::mid_max);

    py::class_<MinimumResult>(m, "MinimumResult")
        .def_readonly("x_min", &MinimumResult::x_min)
        .def_readonly("f_min", &MinimumResult::f_min)
        .def_readonly("iterations", &MinimumResult::iterations)
        .def_readonly("bracket_width", &MinimumResult::bracket_width);

    py::class_<GapProfile>(m, "GapProfile")
        .def_readonly("alpha", &GapProfile::alpha)
        .def_readonly("max_gap", &GapProfile::max_gap)
        .def_readonly("argmax_x", &GapProfile::argmax_x)
        .def_readonly("midpoint_max_abs_error", &GapProfile::midpoint_max_abs_error);

    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("claim_id", &VerificationReport::claim_id)
        .def_readonly("passed", &VerificationReport::passed)
        .def_readonly("skipped", &VerificationReport::skipped)
        .def_readonly("worst_margin", &VerificationReport::worst_margin)
        .def_readonly("worst_x", &VerificationReport::worst_x)
        .def_readonly("points_checked", &VerificationReport::points_checked)
        .def_readonly("tolerance_used", &VerificationReport::tolerance_used)
        .def_readonly("note", &VerificationReport::note)
        .def("__repr__", [](const VerificationReport& r) {
            return "<VerificationReport " + r.claim_id + (r.skipped ? " skipped>" : r.passed ? " passed>" : " FAILED>");
        });

    m.def("alpha_star", &alpha_star);
    m.def("alpha_malesevic", &alpha_malesevic);
    m.def("h_regime_root", &h_regime_root);

    m.def("shafer_ratio", [](double x, double a) { return shafer_ratio(x, Alpha{a}); }, py::arg("x"), py::arg("alpha"));
    m.def("f_alpha", [](double x, double a) { return f_alpha(x, Alpha{a}); }, py::arg("x"), py::arg("alpha"));
    m.def("classify_regime", [](double a) { return classify_regime(Alpha{a}); }, py::arg("alpha"));
    m.def("endpoint_limits", [](double a) { return endpoint_limits(Alpha{a}); }, py::arg("alpha"));
    m.def("lower_bound", [](double x, double a) { return lower_bound(x, Alpha{a}); }, py::arg("x"), py::arg("alpha"));
    m.def("upper_bound", [](double x, double a) { return upper_bound(x, Alpha{a}); }, py::arg("x"), py::arg("alpha"));
    m.def("mid_regime_upper_bound", [](double x, double a) { return mid_regime_upper_bound(x, Alpha{a}); },
          py::arg("x"), py::arg("alpha"));
    m.def("classic_shafer_second", &classic_shafer_second, py::arg("x"));
    m.def("enclosure", [](double x, double a) { return enclosure(x, Alpha{a}); }, py::arg("x"), py::arg("alpha"));
    m.def("enclosure_midpoint", [](double x, double a) { return enclosure_midpoint(x, Alpha{a}); },
          py::arg("x"), py::arg("alpha"));
    m.def("oracle_arcsin", &oracle_arcsin, py::arg("x"));

    m.def("p_fn", &p_fn, py::arg("x"));
    m.def("g_fn", &g_fn, py::arg("x"));
    m.def("h_fn", [](double x, double a) { return h_fn(x, Alpha{a}); }, py::arg("x"), py::arg("alpha"));
    m.def("big_f_fn", [](double x, double a) { return big_f_fn(x, Alpha{a}); }, py::arg("x"), py::arg("alpha"));
    m.def("h_limit_at_one", [](double a) { return h_limit_at_one(Alpha{a}); }, py::arg("alpha"));

    m.def("find_interior_minimum", [](double a, double x_tol) { return find_interior_minimum(Alpha{a}, x_tol); },
          py::arg("alpha"), py::arg("x_tol") = 1e-10);
    m.def("sharpened_mid_lower_constant", [](double a) { return sharpened_mid_lower_constant(Alpha{a}); },
          py::arg("alpha"));
    m.def("gap_profile",
          [](double a, std::size_t n_uniform, bool log_points) {
              return gap_profile(Alpha{a}, make_grid(n_uniform, log_points));
          },
          py::arg("alpha"), py::arg("n_uniform") = 100001, py::arg("log_points") = true);
    m.def("solve_alpha_star_by_bisection", &solve_alpha_star_by_bisection, py::arg("tol"), py::arg("lo") = 3.0,
          py::arg("hi") = 4.0);
    m.def("sharpness_probe", [](double a, double eps) { return sharpness_probe(Alpha{a}, eps); },
          py::arg("alpha"), py::arg("eps"));

    m.def("suite_alphas", [] {
        std::vector<double> out;
        for (Alpha a : suite_alphas()) out.push_back(a.value());
        return out;
    });
    m.def("run_verification",
          [](const std::vector<double>& alphas, std::size_t n_uniform, double tol) {
              std::vector<Alpha> as;
              as.reserve(alphas.size());
              for (double a : alphas) as.emplace_back(a);
              py::gil_scoped_release release;
              return run_verification(as, make_grid(n_uniform, true), tol);
          },
          py::arg("alphas"), py::arg("n_uniform") = 100001, py::arg("tol") = kStrictSlack);
}
