#include "spinfall/run.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "spinfall/channel.hpp"
#include "spinfall/chart.hpp"
#include "spinfall/errors.hpp"
#include "spinfall/kinematics.hpp"
#include "spinfall/wigner.hpp"

namespace spinfall {

namespace {

using nlohmann::json;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

const char* const kTrajectoryColumns =
    "kind,tau,t,t_over_M,r,r_over_M,T,X,beta,"
    "D11_re,D11_im,D12_re,D12_im,D21_re,D21_im,D22_re,D22_im,"
    "unitarity_dev,p,q,trace_out,entropy_paper,entropy_normalized,bitflip_distance";

// The numeric columns shared by trajectory and sweep rows, in header order.
std::vector<double> row_values(const TrajectoryRow& row) {
    return {row.tau,
            row.t,
            row.t / row.mass,
            row.r,
            row.r / row.mass,
            row.T,
            row.X,
            row.beta,
            row.D(0, 0).real(),
            row.D(0, 0).imag(),
            row.D(0, 1).real(),
            row.D(0, 1).imag(),
            row.D(1, 0).real(),
            row.D(1, 0).imag(),
            row.D(1, 1).real(),
            row.D(1, 1).imag(),
            row.report.unitarity_dev,
            row.report.params.p,
            row.report.params.q,
            row.report.trace_out,
            row.report.entropy_paper,
            row.report.entropy_normalized,
            row.report.bitflip_distance};
}

void append_row_values(std::string& out, const TrajectoryRow& row) {
    for (double v : row_values(row)) {
        out += ',';
        out += fmt17(v);
    }
}

const char* mode_name(Mode mode) {
    switch (mode) {
        case Mode::Trajectory: return "trajectory";
        case Mode::Sweep: return "sweep";
        default: return "verify";
    }
}

json config_json(const RunConfig& c) {
    json j{{"mode", mode_name(c.mode)},
           {"mass", c.mass},
           {"alpha0", c.alpha0},
           {"r_start", c.r_start},
           {"r_end", c.r_end},
           {"steps", c.steps},
           {"format", c.format == Format::Csv ? "csv" : "json"},
           {"output", c.output},
           {"workers", c.workers}};
    if (c.mode == Mode::Sweep) {
        j["sweep_axis"] = c.sweep_axis;
        j["sweep_values"] = c.sweep_values;
    }
    return j;
}

json row_json(const TrajectoryRow& row) {
    static const char* const keys[] = {
        "tau",    "t",      "t_over_M", "r",         "r_over_M",      "T",
        "X",      "beta",   "D11_re",   "D11_im",    "D12_re",        "D12_im",
        "D21_re", "D21_im", "D22_re",   "D22_im",    "unitarity_dev", "p",
        "q",      "trace_out", "entropy_paper", "entropy_normalized", "bitflip_distance"};
    const std::vector<double> vals = row_values(row);
    json j;
    for (std::size_t i = 0; i < vals.size(); ++i) j[keys[i]] = vals[i];
    return j;
}

}  // namespace

void validate_config(const RunConfig& config) {
    if (!(config.mass > 0.0)) throw ConfigError("mass must be positive");
    if (!(config.alpha0 > 0.0)) throw ConfigError("alpha0 must be positive");
    if (config.steps < 2) throw ConfigError("steps must be at least 2");
    if (config.workers < 1) throw ConfigError("workers must be at least 1");
    if (config.mode == Mode::Sweep) {
        if (config.sweep_axis != "alpha0" && config.sweep_axis != "r_start" &&
            config.sweep_axis != "M" && config.sweep_axis != "n_steps")
            throw ConfigError("unknown sweep axis: " + config.sweep_axis);
        if (config.sweep_values.empty()) throw ConfigError("sweep mode requires sweep values");
    }
    if (config.mode == Mode::Trajectory) {
        if (config.r_start == config.r_end)
            throw ConfigError("zero-length trajectory: r_start equals r_end");
        if (!(config.r_end > 2.0 * (1.0 + horizon_epsilon)))
            throw ConfigError("r_end must exceed 2(1+eps) in units of M");
        if (!(config.r_end < config.r_start))
            throw ConfigError("infall requires r_end < r_start");
    }
}

TrajectoryResult run_trajectory(const RunConfig& config) {
    validate_config(config);
    const double M = config.mass;
    const auto worldline =
        integrate_worldline(config.r_start * M, config.r_end * M, config.alpha0, M, config.steps);
    const MomentumState mom = momentum_from_rapidity(config.alpha0);
    const auto factors = segment_factors(worldline, mom);
    TrajectoryResult res;
    res.config = config;
    res.rows.reserve(worldline.size() + 1);
    SpinorMap D = mat2_identity();
    for (std::size_t i = 0; i < worldline.size(); ++i) {
        if (i > 0) D = factors[i - 1] * D;
        TrajectoryRow row;
        row.kind = "sample";
        row.tau = worldline[i].tau;
        row.t = worldline[i].t;
        row.r = worldline[i].r;
        row.T = worldline[i].T;
        row.X = worldline[i].X;
        row.beta = worldline[i].beta;
        row.mass = M;
        row.D = D;
        row.report = channel_report(D);
        res.rows.push_back(std::move(row));
    }
    TrajectoryRow summary = res.rows.back();
    summary.kind = "summary";
    res.rows.push_back(std::move(summary));
    return res;
}

RunConfig apply_sweep_value(RunConfig base, const std::string& axis, double value) {
    base.mode = Mode::Trajectory;
    base.sweep_values.clear();
    if (axis == "alpha0") {
        base.alpha0 = value;
    } else if (axis == "r_start") {
        base.r_start = value;
    } else if (axis == "M") {
        base.mass = value;
    } else if (axis == "n_steps") {
        const double rounded = std::round(value);
        if (std::fabs(value - rounded) > 1e-9)
            throw ConfigError("n_steps sweep values must be integers");
        base.steps = static_cast<int>(rounded);
    } else {
        throw ConfigError("unknown sweep axis: " + axis);
    }
    return base;
}

SweepResult run_sweep(const RunConfig& config) {
    validate_config(config);
    const std::size_t n = config.sweep_values.size();
    SweepResult res;
    res.config = config;
    res.rows.resize(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    auto body = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) break;
            try {
                const double value = config.sweep_values[i];
                const TrajectoryResult tr =
                    run_trajectory(apply_sweep_value(config, config.sweep_axis, value));
                res.rows[i].value = value;
                res.rows[i].summary = tr.rows.back();
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    const std::size_t workers = std::min<std::size_t>(config.workers, n);
    if (workers <= 1) {
        body();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(body);
        for (std::thread& th : pool) th.join();
    }
    for (std::size_t i = 0; i < n; ++i)
        if (errors[i]) std::rethrow_exception(errors[i]);
    return res;
}

std::string trajectory_csv(const TrajectoryResult& result) {
    std::string out = kTrajectoryColumns;
    out += '\n';
    for (const TrajectoryRow& row : result.rows) {
        out += row.kind;
        append_row_values(out, row);
        out += '\n';
    }
    return out;
}

std::string sweep_csv(const SweepResult& result) {
    std::string out = "axis,value,";
    out += kTrajectoryColumns + 5;  // drop the leading "kind,"
    out += '\n';
    for (const SweepRow& row : result.rows) {
        out += result.config.sweep_axis;
        out += ',';
        out += fmt17(row.value);
        append_row_values(out, row.summary);
        out += '\n';
    }
    return out;
}

std::string trajectory_json(const TrajectoryResult& result) {
    json samples = json::array();
    for (std::size_t i = 0; i + 1 < result.rows.size(); ++i)
        samples.push_back(row_json(result.rows[i]));
    const json doc{{"config", config_json(result.config)},
                   {"samples", samples},
                   {"summary", row_json(result.rows.back())}};
    return doc.dump(2) + "\n";
}

std::string sweep_json(const SweepResult& result) {
    json rows = json::array();
    for (const SweepRow& row : result.rows)
        rows.push_back(json{{"axis", result.config.sweep_axis},
                            {"value", row.value},
                            {"summary", row_json(row.summary)}});
    const json doc{{"config", config_json(result.config)}, {"rows", rows}};
    return doc.dump(2) + "\n";
}

std::string verify_text(const std::vector<CheckResult>& checks) {
    std::string out;
    int total = 0;
    int passed = 0;
    for (const CheckResult& c : checks) {
        char buf[512];
        if (c.informational) {
            std::snprintf(buf, sizeof buf, "INFO %s (val=%.6g)", c.name.c_str(), c.value);
        } else {
            ++total;
            if (c.pass) ++passed;
            std::snprintf(buf, sizeof buf, "%s %s (val=%.6g, thr=%.6g)",
                          c.pass ? "PASS" : "FAIL", c.name.c_str(), c.value, c.threshold);
        }
        out += buf;
        if (!c.note.empty()) {
            out += " [";
            out += c.note;
            out += ']';
        }
        out += '\n';
    }
    char tail[64];
    std::snprintf(tail, sizeof tail, "%d/%d checks passed\n", passed, total);
    out += tail;
    return out;
}

std::string verify_json(const std::vector<CheckResult>& checks) {
    json arr = json::array();
    int failures = 0;
    for (const CheckResult& c : checks) {
        if (!c.pass && !c.informational) ++failures;
        arr.push_back(json{{"name", c.name},
                           {"value", c.value},
                           {"threshold", c.threshold},
                           {"pass", c.pass},
                           {"informational", c.informational},
                           {"note", c.note}});
    }
    const json doc{{"checks", arr}, {"failures", failures}};
    return doc.dump(2) + "\n";
}

int cli_main(int argc, const char* const* argv) {
    CLI::App app{"Spin transport along radial infall into a Schwarzschild black hole"};
    app.set_config("--config", "", "plain-text key = value configuration file; flags win");
    RunConfig cfg;
    std::string mode = "trajectory";
    std::string format = "csv";
    app.add_option("--mode", mode, "trajectory, sweep, or verify")
        ->check(CLI::IsMember({"trajectory", "sweep", "verify"}));
    app.add_option("--mass", cfg.mass, "black-hole mass M > 0");
    app.add_option("--alpha0", cfg.alpha0, "initial local rapidity");
    app.add_option("--r-start", cfg.r_start, "starting radius in units of M");
    app.add_option("--r-end", cfg.r_end, "final radius in units of M");
    app.add_option("--steps", cfg.steps, "number of integration steps");
    app.add_option("--sweep-axis", cfg.sweep_axis, "alpha0, r_start, M, or n_steps")
        ->check(CLI::IsMember({"alpha0", "r_start", "M", "n_steps"}));
    app.add_option("--sweep-values", cfg.sweep_values, "comma-separated sweep values")
        ->delimiter(',');
    app.add_option("--output", cfg.output, "output path; stdout when omitted");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--workers", cfg.workers, "sweep worker threads");
    app.add_option("--verify-tetrad-perturb", cfg.verify_tetrad_perturb)->group("");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }
    cfg.mode = mode == "trajectory" ? Mode::Trajectory
               : mode == "sweep"    ? Mode::Sweep
                                    : Mode::Verify;
    cfg.format = format == "csv" ? Format::Csv : Format::Json;
    try {
        validate_config(cfg);
        std::string report;
        int status = 0;
        if (cfg.mode == Mode::Trajectory) {
            const TrajectoryResult res = run_trajectory(cfg);
            report = cfg.format == Format::Csv ? trajectory_csv(res) : trajectory_json(res);
        } else if (cfg.mode == Mode::Sweep) {
            const SweepResult res = run_sweep(cfg);
            report = cfg.format == Format::Csv ? sweep_csv(res) : sweep_json(res);
        } else {
            const std::vector<CheckResult> checks = all_checks(cfg.verify_tetrad_perturb);
            report = cfg.format == Format::Json ? verify_json(checks) : verify_text(checks);
            for (const CheckResult& c : checks)
                if (!c.pass && !c.informational) status = 3;
        }
        if (cfg.output.empty()) {
            std::fwrite(report.data(), 1, report.size(), stdout);
        } else {
            std::ofstream out(cfg.output, std::ios::binary);
            if (!out) throw ConfigError("cannot open output path: " + cfg.output);
            out << report;
            out.flush();
            if (!out.good()) throw ConfigError("failed writing output: " + cfg.output);
        }
        return status;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}

}  // namespace spinfall
