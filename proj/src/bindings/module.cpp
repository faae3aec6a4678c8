// Python bindings for the spinfall core.
#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <vector>

#include "spinfall/channel.hpp"
#include "spinfall/errors.hpp"
#include "spinfall/geometry.hpp"
#include "spinfall/kinematics.hpp"
#include "spinfall/run.hpp"
#include "spinfall/verify.hpp"
#include "spinfall/wigner.hpp"

namespace py = pybind11;
using namespace spinfall;

namespace {

using CplxRows = std::vector<std::vector<cplx>>;

CplxRows mat2_rows(const Mat2& m) {
    return {{m(0, 0), m(0, 1)}, {m(1, 0), m(1, 1)}};
}

Mat2 mat2_from_rows(const CplxRows& rows) {
    if (rows.size() != 2 || rows[0].size() != 2 || rows[1].size() != 2)
        throw DomainError("expected a 2x2 matrix as nested lists");
    Mat2 m;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = rows[i][j];
    return m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Spin transport along radial infall into a Schwarzschild black hole";

    const auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<DomainError>(m, "DomainError", base);
    py::register_exception<ConvergenceError>(m, "ConvergenceError", base);
    py::register_exception<StepError>(m, "StepError", base);
    py::register_exception<SingularInputError>(m, "SingularInputError", base);
    py::register_exception<DecompositionError>(m, "DecompositionError", base);
    py::register_exception<ConfigError>(m, "ConfigError", base);

    py::enum_<Chart>(m, "Chart")
        .value("Schwarzschild", Chart::Schwarzschild)
        .value("Kruskal", Chart::Kruskal);
    py::enum_<Mode>(m, "Mode")
        .value("Trajectory", Mode::Trajectory)
        .value("Sweep", Mode::Sweep)
        .value("Verify", Mode::Verify);
    py::enum_<Format>(m, "Format").value("Csv", Format::Csv).value("Json", Format::Json);

    py::class_<ChartPoint>(m, "ChartPoint")
        .def_readonly("chart", &ChartPoint::chart)
        .def_readonly("x", &ChartPoint::x)
        .def_readonly("mass", &ChartPoint::mass);
    m.def("schwarzschild_point", &schwarzschild_point, py::arg("t"), py::arg("r"),
          py::arg("theta"), py::arg("phi"), py::arg("mass"));
    m.def("kruskal_point", &kruskal_point, py::arg("T"), py::arg("X"), py::arg("theta"),
          py::arg("phi"), py::arg("mass"));
    m.def("validate_point", &validate_point, py::arg("point"));

    py::class_<KruskalLog>(m, "KruskalLog")
        .def_readonly("log_prefactor", &KruskalLog::log_prefactor)
        .def_readonly("angle", &KruskalLog::angle)
        .def("T", &KruskalLog::T)
        .def("X", &KruskalLog::X);

    py::class_<NewtonResult>(m, "NewtonResult")
        .def_readonly("r", &NewtonResult::r)
        .def_readonly("iterations", &NewtonResult::iterations);

    py::class_<Metric>(m, "Metric").def_readonly("g", &Metric::g);
    py::class_<Tetrad>(m, "Tetrad")
        .def_readonly("forward", &Tetrad::forward)
        .def_readonly("inverse", &Tetrad::inverse)
        .def_readonly("point", &Tetrad::point);
    py::class_<ChristoffelSymbols>(m, "ChristoffelSymbols")
        .def_readonly("gamma", &ChristoffelSymbols::gamma);
    py::class_<ConnectionOneForms>(m, "ConnectionOneForms")
        .def_readonly("w", &ConnectionOneForms::w);

    m.def("metric_at", &metric_at, py::arg("point"));
    m.def("tetrad_at", &tetrad_at, py::arg("point"));
    m.def("christoffel_analytic", &christoffel_analytic, py::arg("point"));
    m.def("christoffel_numeric", &christoffel_numeric, py::arg("point"), py::arg("h") = 1e-6);
    m.def("connection_one_forms", &connection_one_forms, py::arg("point"));
    m.def("connection_one_forms_numeric", &connection_one_forms_numeric, py::arg("point"),
          py::arg("h") = 1e-6);
    m.def(
        "lorentz_step",
        [](const ChartPoint& point, const std::array<double, 4>& displacement) {
            return lorentz_step(connection_one_forms(point), displacement);
        },
        py::arg("point"), py::arg("displacement"));
    m.def("killing_norm", &killing_norm, py::arg("point"));
    m.def("killing_residual", &killing_residual, py::arg("point"), py::arg("h") = 1e-6);
    m.def(
        "metric_compatibility_residual",
        [](const ChartPoint& point, double h) {
            return metric_compatibility_residual(point, christoffel_analytic(point), h);
        },
        py::arg("point"), py::arg("h") = 1e-6);
    m.def("kruskal_radius", &kruskal_radius, py::arg("x2_minus_t2"), py::arg("mass"));

    py::class_<MomentumState>(m, "MomentumState")
        .def_readonly("m", &MomentumState::m)
        .def_readonly("p0", &MomentumState::p0)
        .def_readonly("alpha", &MomentumState::alpha)
        .def_readonly("K", &MomentumState::K);
    py::class_<WorldlineSample>(m, "WorldlineSample")
        .def_readonly("tau", &WorldlineSample::tau)
        .def_readonly("t", &WorldlineSample::t)
        .def_readonly("r", &WorldlineSample::r)
        .def_readonly("mass", &WorldlineSample::mass)
        .def_readonly("klog", &WorldlineSample::klog)
        .def_readonly("T", &WorldlineSample::T)
        .def_readonly("X", &WorldlineSample::X)
        .def_readonly("U_coord", &WorldlineSample::U_coord)
        .def_readonly("U_local", &WorldlineSample::U_local)
        .def_readonly("beta", &WorldlineSample::beta)
        .def_readonly("dT", &WorldlineSample::dT);

    m.def("kruskal_from_schwarzschild", &kruskal_from_schwarzschild, py::arg("t"), py::arg("r"),
          py::arg("mass"));
    m.def("kruskal_log_from_schwarzschild", &kruskal_log_from_schwarzschild, py::arg("t"),
          py::arg("r"), py::arg("mass"));
    m.def("schwarzschild_from_kruskal", &schwarzschild_from_kruskal, py::arg("T"), py::arg("X"),
          py::arg("mass"));
    m.def("kruskal_jacobian", &kruskal_jacobian, py::arg("t"), py::arg("r"), py::arg("mass"));
    m.def("momentum_state", &momentum_state, py::arg("p0"), py::arg("m"));
    m.def("momentum_from_rapidity", &momentum_from_rapidity, py::arg("alpha"),
          py::arg("m") = 1.0);
    m.def("radial_velocity", &radial_velocity, py::arg("r"), py::arg("alpha"), py::arg("mass"));
    m.def("shifted_exp_diff", &shifted_exp_diff, py::arg("a"), py::arg("b"), py::arg("shift"));
    m.def("integrate_worldline", &integrate_worldline, py::arg("r_start"), py::arg("r_end"),
          py::arg("alpha0"), py::arg("mass"), py::arg("n_steps"));

    py::class_<StepInputs>(m, "StepInputs")
        .def(py::init<>())
        .def_readwrite("a", &StepInputs::a)
        .def_readwrite("b", &StepInputs::b)
        .def_readwrite("beta", &StepInputs::beta)
        .def_readwrite("K", &StepInputs::K)
        .def_readwrite("T", &StepInputs::T)
        .def_readwrite("X", &StepInputs::X)
        .def_readwrite("dT", &StepInputs::dT)
        .def_readwrite("dtheta", &StepInputs::dtheta)
        .def_readwrite("dphi", &StepInputs::dphi);

    m.def("scalar_a", &scalar_a, py::arg("r"), py::arg("mass"));
    m.def("scalar_b", &scalar_b, py::arg("r"), py::arg("mass"));
    m.def(
        "step_matrix", [](const StepInputs& in) { return mat2_rows(step_matrix(in)); },
        py::arg("inputs"));
    m.def(
        "flat_limit_step", [](double dphi) { return mat2_rows(flat_limit_step(dphi)); },
        py::arg("dphi"));
    m.def(
        "segment_factors",
        [](const std::vector<WorldlineSample>& wl, const MomentumState& mom) {
            std::vector<CplxRows> out;
            for (const SpinorMap& f : segment_factors(wl, mom)) out.push_back(mat2_rows(f));
            return out;
        },
        py::arg("worldline"), py::arg("momentum"));
    m.def(
        "accumulate",
        [](const std::vector<WorldlineSample>& wl, const MomentumState& mom) {
            return mat2_rows(accumulate(wl, mom));
        },
        py::arg("worldline"), py::arg("momentum"));
    m.def(
        "accumulate_reversed",
        [](const std::vector<WorldlineSample>& wl, const MomentumState& mom) {
            return mat2_rows(accumulate_reversed(wl, mom));
        },
        py::arg("worldline"), py::arg("momentum"));
    m.def(
        "closed_form_radial",
        [](const std::vector<WorldlineSample>& wl, const MomentumState& mom) {
            return mat2_rows(closed_form_radial(wl, mom));
        },
        py::arg("worldline"), py::arg("momentum"));
    m.def(
        "unitarity_deviation",
        [](const CplxRows& rows) { return unitarity_deviation(mat2_from_rows(rows)); },
        py::arg("D"));
    m.def(
        "su2_form_check",
        [](const CplxRows& rows, double tol) { return su2_form_check(mat2_from_rows(rows), tol); },
        py::arg("D"), py::arg("tol"));

    py::class_<DensityMatrix>(m, "DensityMatrix")
        .def(py::init([](const CplxRows& rows) {
                 DensityMatrix d;
                 d.rho = mat2_from_rows(rows);
                 return d;
             }),
             py::arg("rho"))
        .def_property_readonly("rho",
                               [](const DensityMatrix& d) { return mat2_rows(d.rho); })
        .def("trace", &DensityMatrix::trace);
    py::class_<ChannelParams>(m, "ChannelParams")
        .def(py::init([](double p, double q, double residual) {
                 return ChannelParams{p, q, residual};
             }),
             py::arg("p"), py::arg("q"), py::arg("residual") = 0.0)
        .def_readwrite("p", &ChannelParams::p)
        .def_readwrite("q", &ChannelParams::q)
        .def_readwrite("residual", &ChannelParams::residual);
    py::class_<BitflipFit>(m, "BitflipFit")
        .def_readonly("distance", &BitflipFit::distance)
        .def_readonly("lam", &BitflipFit::lambda);
    py::class_<ChannelReport>(m, "ChannelReport")
        .def_readonly("params", &ChannelReport::params)
        .def_readonly("entropy_paper", &ChannelReport::entropy_paper)
        .def_readonly("entropy_normalized", &ChannelReport::entropy_normalized)
        .def_readonly("purity", &ChannelReport::purity)
        .def_readonly("unitarity_dev", &ChannelReport::unitarity_dev)
        .def_readonly("trace_out", &ChannelReport::trace_out)
        .def_readonly("bitflip_distance", &ChannelReport::bitflip_distance);

    m.def("spin_up_state", &spin_up_state);
    m.def("spin_up_output", &spin_up_output, py::arg("p"), py::arg("q"));
    m.def(
        "apply_map",
        [](const DensityMatrix& rho, const CplxRows& rows) {
            return apply_map(rho, mat2_from_rows(rows));
        },
        py::arg("rho"), py::arg("D"));
    m.def(
        "extract_pq", [](const CplxRows& rows) { return extract_pq(mat2_from_rows(rows)); },
        py::arg("D"));
    m.def("von_neumann_entropy", &von_neumann_entropy, py::arg("rho"), py::arg("normalize"));
    m.def("purity", &purity, py::arg("rho"));
    m.def("bitflip_fit", &bitflip_fit, py::arg("params"));
    m.def("bitflip_distance", &bitflip_distance, py::arg("params"));
    m.def(
        "channel_report", [](const CplxRows& rows) { return channel_report(mat2_from_rows(rows)); },
        py::arg("D"));

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("name", &CheckResult::name)
        .def_readonly("value", &CheckResult::value)
        .def_readonly("threshold", &CheckResult::threshold)
        .def_readonly("ok", &CheckResult::pass)
        .def_readonly("informational", &CheckResult::informational)
        .def_readonly("note", &CheckResult::note);

    m.def("check_tetrad_compatibility", &check_tetrad_compatibility,
          py::arg("tetrad_perturb") = 0.0);
    m.def("check_tetrad_duality", &check_tetrad_duality);
    m.def("check_christoffel_oracle", &check_christoffel_oracle);
    m.def("check_connection_antisymmetry", &check_connection_antisymmetry);
    m.def("check_connection_oracle", &check_connection_oracle);
    m.def("check_metric_pullback", &check_metric_pullback);
    m.def("check_killing_residual", &check_killing_residual);
    m.def("check_killing_causality", &check_killing_causality);
    m.def("check_roundtrip", &check_roundtrip);
    m.def("check_forward_identity", &check_forward_identity);
    m.def("check_worldline_normalization", &check_worldline_normalization);
    m.def("check_commutation", &check_commutation);
    m.def("check_refinement_ratio", &check_refinement_ratio);
    m.def("check_channel_consistency", &check_channel_consistency);
    m.def("check_entropy_invariants", &check_entropy_invariants);
    m.def("check_determinism", &check_determinism);
    m.def("info_literal_one_forms", &info_literal_one_forms);
    m.def("info_comparator_distance", &info_comparator_distance);
    m.def("all_checks", &all_checks, py::arg("tetrad_perturb") = 0.0);

    py::class_<RunConfig>(m, "RunConfig")
        .def(py::init<>())
        .def_readwrite("mode", &RunConfig::mode)
        .def_readwrite("mass", &RunConfig::mass)
        .def_readwrite("alpha0", &RunConfig::alpha0)
        .def_readwrite("r_start", &RunConfig::r_start)
        .def_readwrite("r_end", &RunConfig::r_end)
        .def_readwrite("steps", &RunConfig::steps)
        .def_readwrite("sweep_axis", &RunConfig::sweep_axis)
        .def_readwrite("sweep_values", &RunConfig::sweep_values)
        .def_readwrite("output", &RunConfig::output)
        .def_readwrite("format", &RunConfig::format)
        .def_readwrite("workers", &RunConfig::workers)
        .def_readwrite("verify_tetrad_perturb", &RunConfig::verify_tetrad_perturb);
    py::class_<TrajectoryRow>(m, "TrajectoryRow")
        .def_readonly("kind", &TrajectoryRow::kind)
        .def_readonly("tau", &TrajectoryRow::tau)
        .def_readonly("t", &TrajectoryRow::t)
        .def_readonly("r", &TrajectoryRow::r)
        .def_readonly("T", &TrajectoryRow::T)
        .def_readonly("X", &TrajectoryRow::X)
        .def_readonly("beta", &TrajectoryRow::beta)
        .def_readonly("mass", &TrajectoryRow::mass)
        .def_property_readonly("D", [](const TrajectoryRow& row) { return mat2_rows(row.D); })
        .def_readonly("report", &TrajectoryRow::report);
    py::class_<TrajectoryResult>(m, "TrajectoryResult")
        .def_readonly("config", &TrajectoryResult::config)
        .def_readonly("rows", &TrajectoryResult::rows);
    py::class_<SweepRow>(m, "SweepRow")
        .def_readonly("value", &SweepRow::value)
        .def_readonly("summary", &SweepRow::summary);
    py::class_<SweepResult>(m, "SweepResult")
        .def_readonly("config", &SweepResult::config)
        .def_readonly("rows", &SweepResult::rows);

    m.def("validate_config", &validate_config, py::arg("config"));
    m.def("run_trajectory", &run_trajectory, py::arg("config"));
    m.def("apply_sweep_value", &apply_sweep_value, py::arg("base"), py::arg("axis"),
          py::arg("value"));
    m.def("run_sweep", &run_sweep, py::arg("config"));
    m.def("trajectory_csv", &trajectory_csv, py::arg("result"));
    m.def("trajectory_json", &trajectory_json, py::arg("result"));
    m.def("sweep_csv", &sweep_csv, py::arg("result"));
    m.def("sweep_json", &sweep_json, py::arg("result"));
    m.def("verify_text", &verify_text, py::arg("checks"));
    m.def("verify_json", &verify_json, py::arg("checks"));
}
