// Run configuration, trajectory and sweep drivers, CSV/JSON serialization,
// and the command-line entry point.
#pragma once

#include <string>
#include <vector>

#include "spinfall/channel.hpp"
#include "spinfall/verify.hpp"
#include "spinfall/wigner.hpp"

namespace spinfall {

enum class Mode { Trajectory, Sweep, Verify };
enum class Format { Csv, Json };

// Radii are expressed in units of M; all other quantities are geometric.
struct RunConfig {
    Mode mode = Mode::Trajectory;
    double mass = 1.0;
    double alpha0 = 1.0;
    double r_start = 6.0;
    double r_end = 2.2;
    int steps = 2000;
    std::string sweep_axis = "alpha0";
    std::vector<double> sweep_values;
    std::string output;  // empty writes to stdout
    Format format = Format::Csv;
    int workers = 4;
    double verify_tetrad_perturb = 0.0;  // sensitivity test hook
};

// Throws ConfigError on any out-of-range field; every driver calls it first.
void validate_config(const RunConfig& config);

struct TrajectoryRow {
    std::string kind;  // "sample" or "summary"
    double tau = 0.0;
    double t = 0.0;
    double r = 0.0;
    double T = 0.0;
    double X = 0.0;
    double beta = 0.0;
    double mass = 1.0;
    SpinorMap D;
    ChannelReport report;
};

struct TrajectoryResult {
    RunConfig config;
    std::vector<TrajectoryRow> rows;  // samples in order, then one summary row
};

TrajectoryResult run_trajectory(const RunConfig& config);

struct SweepRow {
    double value = 0.0;
    TrajectoryRow summary;
};

struct SweepResult {
    RunConfig config;
    std::vector<SweepRow> rows;  // one per sweep value, input order
};

// Returns a copy of base with one axis ("alpha0", "r_start", "M", "n_steps")
// set to value; ConfigError on an unknown axis.
RunConfig apply_sweep_value(RunConfig base, const std::string& axis, double value);

// Runs one trajectory per sweep value on a worker pool; row order follows the
// input values regardless of completion order.
SweepResult run_sweep(const RunConfig& config);

std::string trajectory_csv(const TrajectoryResult& result);
std::string trajectory_json(const TrajectoryResult& result);
std::string sweep_csv(const SweepResult& result);
std::string sweep_json(const SweepResult& result);
std::string verify_text(const std::vector<CheckResult>& checks);
std::string verify_json(const std::vector<CheckResult>& checks);

// Parses flags plus an optional key = value config file (flags win), runs the
// selected mode, and writes the report.  Exit codes: 0 success, 1 config
// error, 2 numerical/domain failure, 3 verify-suite failure.
int cli_main(int argc, const char* const* argv);

}  // namespace spinfall
