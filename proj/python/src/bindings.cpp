#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "pplus/expectation.hpp"
#include "pplus/runner.hpp"
#include "pplus/sampling.hpp"
#include "pplus/scans.hpp"
#include "pplus/selftest.hpp"
#include "pplus/version.hpp"

namespace py = pybind11;
using namespace pplus;

PYBIND11_MODULE(_pplus, m) {
    m.doc() = "complex-mass representations of the causal Poincare semigroup";
    m.attr("__version__") = kVersion;

    // kinematics ----------------------------------------------------------
    py::class_<FourVector>(m, "FourVector")
        .def(py::init<double, double, double, double>(), py::arg("t"), py::arg("x"), py::arg("y"),
             py::arg("z"))
        .def_readwrite("t", &FourVector::t)
        .def_readwrite("x", &FourVector::x)
        .def_readwrite("y", &FourVector::y)
        .def_readwrite("z", &FourVector::z)
        .def("spatial", &FourVector::spatial)
        .def("minkowski_square", &FourVector::minkowski_square)
        .def("minkowski_dot", &FourVector::minkowski_dot)
        .def("__add__", &FourVector::operator+)
        .def("__sub__", static_cast<FourVector (FourVector::*)(const FourVector&) const>(
                            &FourVector::operator-))
        .def("__repr__", [](const FourVector& a) {
            return "FourVector(" + std::to_string(a.t) + ", " + std::to_string(a.x) + ", "
                   + std::to_string(a.y) + ", " + std::to_string(a.z) + ")";
        });

    py::enum_<IntervalClass>(m, "IntervalClass")
        .value("InForwardCone", IntervalClass::InForwardCone)
        .value("Spacelike", IntervalClass::Spacelike)
        .value("PastPointing", IntervalClass::PastPointing);

    m.def("classify_interval", &classify_interval, py::arg("a"));

    py::class_<SpinorMap>(m, "SpinorMap")
        .def(py::init<const Mat2c&>(), py::arg("matrix"))
        .def("matrix", &SpinorMap::matrix, py::return_value_policy::copy)
        .def("inverse", &SpinorMap::inverse)
        .def("is_unitary", &SpinorMap::is_unitary, py::arg("tol") = 1e-10)
        .def("__mul__", &SpinorMap::operator*)
        .def_static("identity", &SpinorMap::identity);

    py::class_<LorentzTransform>(m, "LorentzTransform")
        .def_static("identity", &LorentzTransform::identity)
        .def_static("boost", &LorentzTransform::boost, py::arg("uvec"))
        .def_static("rotation", &LorentzTransform::rotation, py::arg("axis"), py::arg("angle"))
        .def_static("from_matrix", &LorentzTransform::from_matrix, py::arg("lambda_matrix"))
        .def_static("from_spinor", &LorentzTransform::from_spinor, py::arg("spinor"))
        .def("matrix", &LorentzTransform::matrix, py::return_value_policy::copy)
        .def("spinor_lift", &LorentzTransform::spinor_lift, py::return_value_policy::copy)
        .def("inverse", &LorentzTransform::inverse)
        .def("apply", &LorentzTransform::apply, py::arg("a"))
        .def("apply_velocity", &LorentzTransform::apply_velocity, py::arg("uvec"))
        .def("__mul__", &LorentzTransform::operator*);

    m.def("standard_boost", &standard_boost, py::arg("uvec"));

    py::class_<WignerRotation>(m, "WignerRotation")
        .def_readonly("rotation", &WignerRotation::rotation)
        .def_readonly("spinor", &WignerRotation::spinor);

    m.def("wigner_rotation", &wigner_rotation, py::arg("lam"), py::arg("uvec"));

    py::class_<WignerDMatrix>(m, "WignerDMatrix")
        .def("matrix", &WignerDMatrix::matrix, py::return_value_policy::copy)
        .def("entry", &WignerDMatrix::entry, py::arg("two_m_row"), py::arg("two_m_col"))
        .def_property_readonly("two_j", &WignerDMatrix::two_j)
        .def_property_readonly("dim", &WignerDMatrix::dim)
        .def("is_unitary", &WignerDMatrix::is_unitary, py::arg("tol") = 1e-10);

    m.def("wigner_d", &wigner_d, py::arg("two_j"), py::arg("spinor"));

    // state space ----------------------------------------------------------
    py::enum_<GridMode>(m, "GridMode")
        .value("OneDReduced", GridMode::OneDReduced)
        .value("ThreeD", GridMode::ThreeD);

    py::class_<QuadratureGrid>(m, "QuadratureGrid")
        .def_static("one_d", &QuadratureGrid::one_d, py::arg("u_max"), py::arg("n"))
        .def_static("three_d", &QuadratureGrid::three_d, py::arg("u_max"), py::arg("n"))
        .def_property_readonly("mode", &QuadratureGrid::mode)
        .def_property_readonly("u_max", &QuadratureGrid::u_max)
        .def_property_readonly("n", &QuadratureGrid::points_per_axis)
        .def("__len__", &QuadratureGrid::size)
        .def("nodes", &QuadratureGrid::nodes, py::return_value_policy::copy)
        .def("weights", &QuadratureGrid::weights, py::return_value_policy::copy)
        .def("refined", &QuadratureGrid::refined, py::arg("factor"));

    py::class_<SpinWavefunction>(m, "SpinWavefunction")
        .def(py::init([](int two_j, std::function<cplx(const Vec3&, int)> eval, std::string desc) {
                 return SpinWavefunction{two_j, std::move(eval), std::move(desc)};
             }),
             py::arg("two_j"), py::arg("eval"), py::arg("description") = "python")
        .def_readonly("two_j", &SpinWavefunction::two_j)
        .def_readonly("description", &SpinWavefunction::description)
        .def("eval", [](const SpinWavefunction& f, const Vec3& u, int two_j3) {
            return f.eval(u, two_j3);
        }, py::arg("uvec"), py::arg("two_j3") = 0);

    m.def("gaussian_packet", &gaussian_packet, py::arg("center"), py::arg("width"),
          py::arg("two_j") = 0, py::arg("j3_weights") = std::vector<cplx>{1.0});
    m.def("cauchy_packet", &cauchy_packet, py::arg("center"), py::arg("width"), py::arg("power"),
          py::arg("two_j") = 0, py::arg("j3_weights") = std::vector<cplx>{1.0});
    m.def("bump_packet", &bump_packet, py::arg("center"), py::arg("half_width"),
          py::arg("two_j") = 0, py::arg("j3_weights") = std::vector<cplx>{1.0});
    m.def("scaled", &scaled, py::arg("f"), py::arg("factor"));
    m.def("inner_product", &inner_product, py::arg("f"), py::arg("g"), py::arg("grid"));
    m.def("norm_squared", &norm_squared, py::arg("f"), py::arg("grid"));

    py::class_<NormalizedState>(m, "NormalizedState")
        .def_readonly("wavefunction", &NormalizedState::wavefunction)
        .def_readonly("grid", &NormalizedState::grid)
        .def_readonly("norm_residual", &NormalizedState::norm_residual);

    m.def("normalize", &normalize, py::arg("f"), py::arg("grid"));

    py::class_<Interval>(m, "Interval")
        .def(py::init<double, double>(), py::arg("lo"), py::arg("hi"))
        .def_readwrite("lo", &Interval::lo)
        .def_readwrite("hi", &Interval::hi);

    py::class_<BumpProfile>(m, "BumpProfile")
        .def(py::init<double, double>(), py::arg("center"), py::arg("half_width"))
        .def_readwrite("center", &BumpProfile::center)
        .def_readwrite("half_width", &BumpProfile::half_width)
        .def("value", &BumpProfile::value, py::arg("x"));

    m.def("position_density_1d", &position_density_1d, py::arg("f"), py::arg("grid"),
          py::arg("x_values"), py::arg("mass_scale"));
    m.def("wavefunction_from_position_profile", &wavefunction_from_position_profile,
          py::arg("profile"), py::arg("mass_scale"), py::arg("x_samples") = 2048);

    // evolution -------------------------------------------------------------
    py::class_<ComplexMass>(m, "ComplexMass")
        .def(py::init<double, double>(), py::arg("mass"), py::arg("width"))
        .def_readonly("mass", &ComplexMass::mass)
        .def_readonly("width", &ComplexMass::width)
        .def_property_readonly("sqrt_s_r", &ComplexMass::sqrt_s_r)
        .def_property_readonly("s_r", &ComplexMass::s_r)
        .def_property_readonly("stable", &ComplexMass::stable);

    m.def("apply_hamiltonian", &apply_hamiltonian, py::arg("f"), py::arg("cm"));
    m.def("evolve", &evolve, py::arg("f"), py::arg("cm"), py::arg("t"));
    m.def("translate", &translate, py::arg("f"), py::arg("cm"), py::arg("a"),
          py::arg("checked") = true);
    m.def("poincare_transform", &poincare_transform, py::arg("f"), py::arg("cm"), py::arg("lam"),
          py::arg("a"), py::arg("checked") = true);
    m.def("stable_transform", &stable_transform, py::arg("f"), py::arg("m"), py::arg("lam"),
          py::arg("a"));
    m.def("complex_time_evolve", &complex_time_evolve, py::arg("f"), py::arg("cm"), py::arg("z"));

    // analysis ---------------------------------------------------------------
    py::class_<SpectrumDescriptor>(m, "SpectrumDescriptor")
        .def_static("closed_form_ray", &SpectrumDescriptor::closed_form_ray, py::arg("cm"))
        .def_static("sampled", &SpectrumDescriptor::sampled, py::arg("points"));

    m.def("sample_ray", &sample_ray, py::arg("cm"), py::arg("count"), py::arg("u0_max"));

    py::enum_<StripVerdict>(m, "StripVerdict")
        .value("Satisfied", StripVerdict::Satisfied)
        .value("Degenerate", StripVerdict::Degenerate)
        .value("Violated", StripVerdict::Violated);

    py::class_<StripBounds>(m, "StripBounds")
        .def_readonly("k0", &StripBounds::k0)
        .def_readonly("k1", &StripBounds::k1)
        .def_readonly("k2", &StripBounds::k2)
        .def_readonly("k1_empty", &StripBounds::k1_empty)
        .def_readonly("k2_empty", &StripBounds::k2_empty)
        .def_readonly("zero_axis_conflict", &StripBounds::zero_axis_conflict)
        .def_readonly("verdict", &StripBounds::verdict)
        .def("half_width", &StripBounds::half_width);

    m.def("spectral_bounds", &spectral_bounds, py::arg("spectrum"));

    py::class_<AnalyticStrip>(m, "AnalyticStrip")
        .def_readonly("half_width", &AnalyticStrip::half_width)
        .def("contains", &AnalyticStrip::contains, py::arg("z"), py::arg("closed") = true);

    m.def("analytic_strip", &analytic_strip, py::arg("bounds"));

    py::class_<Observable>(m, "Observable")
        .def_static("identity", &Observable::identity)
        .def_static("zero", &Observable::zero)
        .def_static("velocity_multiplier", &Observable::velocity_multiplier, py::arg("fn"),
                    py::arg("description") = "python multiplier")
        .def_static("velocity_indicator", &Observable::velocity_indicator, py::arg("u_star"),
                    py::arg("outside"))
        .def_static("position_projector", &Observable::position_projector, py::arg("v"),
                    py::arg("mass_scale"), py::arg("x_samples") = 801)
        .def_static("hermitian_grid_matrix", &Observable::hermitian_grid_matrix, py::arg("matrix"))
        .def_property_readonly("description", &Observable::description)
        .def("form", &Observable::form, py::arg("g"), py::arg("h"), py::arg("grid"))
        .def("expectation_raw", &Observable::expectation_raw, py::arg("f"), py::arg("grid"))
        .def("apply", &Observable::apply, py::arg("f"), py::arg("grid"));

    py::class_<ZeroReport>(m, "ZeroReport")
        .def_readonly("threshold", &ZeroReport::threshold)
        .def_readonly("below_fraction", &ZeroReport::below_fraction)
        .def_readonly("max_run_length", &ZeroReport::max_run_length)
        .def_readonly("run_lengths", &ZeroReport::run_lengths);

    py::class_<ExpectationSeries>(m, "ExpectationSeries")
        .def_readonly("t_grid", &ExpectationSeries::t_grid)
        .def_readonly("values", &ExpectationSeries::values)
        .def_readonly("scale", &ExpectationSeries::scale)
        .def_readonly("zero_report", &ExpectationSeries::zero_report);

    py::enum_<DichotomyVerdict>(m, "DichotomyVerdict")
        .value("AlmostNeverZero", DichotomyVerdict::AlmostNeverZero)
        .value("IdenticallyZero", DichotomyVerdict::IdenticallyZero)
        .value("Inconclusive", DichotomyVerdict::Inconclusive);

    m.def("expectation_series", &expectation_series, py::arg("state"), py::arg("observable"),
          py::arg("cm"), py::arg("t_grid"), py::arg("eps_rel") = kDichotomyEpsRel);
    m.def("dichotomy_probe", &dichotomy_probe, py::arg("series"),
          py::arg("eps_rel") = kDichotomyEpsRel);
    m.def("complex_expectation", &complex_expectation, py::arg("f"), py::arg("grid"),
          py::arg("observable"), py::arg("cm"), py::arg("z"));
    m.def("spacetime_expectation", &spacetime_expectation, py::arg("f"), py::arg("grid"),
          py::arg("observable"), py::arg("cm"), py::arg("a"));
    m.def("renormalized_expectation", &renormalized_expectation, py::arg("f"), py::arg("grid"),
          py::arg("observable"), py::arg("cm"), py::arg("a"));

    py::enum_<ScanQuantity>(m, "ScanQuantity")
        .value("NormSquared", ScanQuantity::NormSquared)
        .value("Expectation", ScanQuantity::Expectation)
        .value("RenormalizedExpectation", ScanQuantity::RenormalizedExpectation);

    py::class_<ScanRow>(m, "ScanRow")
        .def_readonly("a", &ScanRow::a)
        .def_readonly("classification", &ScanRow::classification)
        .def_readonly("checked", &ScanRow::checked)
        .def_readonly("value", &ScanRow::value);

    py::class_<ScanReport>(m, "ScanReport")
        .def_readonly("quantity", &ScanReport::quantity)
        .def_readonly("checked_mode", &ScanReport::checked_mode)
        .def_readonly("reference_norm_squared", &ScanReport::reference_norm_squared)
        .def_readonly("rows", &ScanReport::rows)
        .def_readonly("first_exceed_x", &ScanReport::first_exceed_x);

    m.def("lattice_scan", &lattice_scan, py::arg("f"), py::arg("grid"), py::arg("observable"),
          py::arg("cm"), py::arg("lattice"), py::arg("quantity"), py::arg("checked_mode"),
          py::arg("threads") = 1);
    m.def("norm_growth_scan", &norm_growth_scan, py::arg("f"), py::arg("grid"), py::arg("cm"),
          py::arg("direction"), py::arg("t"), py::arg("x_values"), py::arg("alpha") = 1e6,
          py::arg("threads") = 1);

    py::class_<RefinementPoint>(m, "RefinementPoint")
        .def_readonly("u_max", &RefinementPoint::u_max)
        .def_readonly("n", &RefinementPoint::n)
        .def_readonly("value", &RefinementPoint::value);

    py::class_<RefinementReport>(m, "RefinementReport")
        .def_readonly("a", &RefinementReport::a)
        .def_readonly("classification", &RefinementReport::classification)
        .def_readonly("points", &RefinementReport::points)
        .def_readonly("fitted_rates", &RefinementReport::fitted_rates);

    m.def("cutoff_growth_refinement", &cutoff_growth_refinement, py::arg("f"), py::arg("cm"),
          py::arg("a"), py::arg("u_max_values"), py::arg("points_per_unit"),
          py::arg("mode") = GridMode::OneDReduced);

    py::class_<TailsResult>(m, "TailsResult")
        .def_readonly("t_values", &TailsResult::t_values)
        .def_readonly("outside_probability", &TailsResult::outside_probability)
        .def_readonly("initial_outside", &TailsResult::initial_outside)
        .def_readonly("noise_floor", &TailsResult::noise_floor)
        .def_readonly("tails_everywhere", &TailsResult::tails_everywhere);

    m.def("tails_probe", &tails_probe, py::arg("profile"), py::arg("cm"), py::arg("v"),
          py::arg("t_values"), py::arg("grid"), py::arg("x_samples") = 4001);

    // runner ------------------------------------------------------------------
    py::class_<SuiteResult>(m, "SuiteResult")
        .def_readonly("name", &SuiteResult::name)
        .def_readonly("trials", &SuiteResult::trials)
        .def_readonly("max_deviation", &SuiteResult::max_deviation)
        .def_readonly("tolerance", &SuiteResult::tolerance)
        .def_readonly("pass_", &SuiteResult::pass);

    m.def("run_selftest", &run_selftest, py::arg("seed"), py::arg("trials_scale") = 1);

    m.def("run_experiment_json", [](const std::string& config_text, const std::string& out_dir,
                                    int threads, bool deterministic) {
        const ValidationResult vr = validate_config_text(config_text);
        if (!vr.ok()) {
            std::string msg = "invalid config:";
            for (const auto& e : vr.errors) msg += "\n  " + e;
            throw std::invalid_argument(msg);
        }
        const RunResult r = run_experiment(*vr.config, {out_dir, threads, deterministic});
        return py::make_tuple(r.exit_code, r.summary.dump());
    }, py::arg("config_text"), py::arg("out_dir"), py::arg("threads") = 1,
       py::arg("deterministic") = false);

    m.def("validate_config_text", [](const std::string& text) {
        const ValidationResult vr = validate_config_text(text);
        return py::make_tuple(vr.ok(), vr.errors);
    }, py::arg("text"));
}
