// Copyright 2026 The fockloop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// fockloop: heralded photon-number state generation in a beam splitter
// feedback loop. Subcommands: run, sweep, optimize, wigner, verify.
// Exit codes: 0 success, 1 I/O or runtime failure, 2 usage error,
// 3 verification failure.

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fockloop/loop.hpp"
#include "fockloop/report.hpp"
#include "fockloop/sweep.hpp"
#include "fockloop/verify.hpp"
#include "fockloop/wigner.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailed = 3;

// "a:b:count" -> LinearGrid. Bounds may be negative (phase-space grids);
// range restrictions live with the consumer.
fockloop::LinearGrid parse_grid(const std::string& text, const std::string& flag) {
    const auto first = text.find(':');
    const auto second = first == std::string::npos ? std::string::npos : text.find(':', first + 1);
    if (first == std::string::npos || second == std::string::npos ||
        text.find(':', second + 1) != std::string::npos) {
        throw std::invalid_argument(flag + ": expected start:stop:count, got '" + text + "'");
    }
    try {
        std::size_t used = 0;
        const std::string count_text = text.substr(second + 1);
        const double start = std::stod(text.substr(0, first));
        const double stop = std::stod(text.substr(first + 1, second - first - 1));
        const int count = std::stoi(count_text, &used);
        if (used != count_text.size()) {
            throw std::invalid_argument("trailing characters");
        }
        if (count < 2) {
            throw std::invalid_argument(flag + ": count must be at least 2");
        }
        return fockloop::LinearGrid{start, stop, count};
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument(flag + ": expected start:stop:count, got '" + text + "'");
    } catch (const std::out_of_range&) {
        throw std::invalid_argument(flag + ": value out of range in '" + text + "'");
    }
}

fockloop::MetricSelection parse_metrics(const std::string& text) {
    fockloop::MetricSelection metrics{false, false, false};
    std::size_t begin = 0;
    while (begin <= text.size()) {
        const std::size_t end = std::min(text.find(',', begin), text.size());
        const std::string item = text.substr(begin, end - begin);
        if (item == "probability") {
            metrics.probability = true;
        } else if (item == "fidelity") {
            metrics.fidelity = true;
        } else if (item == "purity") {
            metrics.purity = true;
        } else {
            throw std::invalid_argument("--metrics: unknown metric '" + item +
                                        "' (want probability, fidelity, purity)");
        }
        begin = end + 1;
        if (end == text.size()) break;
    }
    return metrics;
}

fockloop::OptimizeObjective parse_objective(const std::string& text) {
    if (text == "fidelity") return fockloop::OptimizeObjective::kFidelity;
    if (text == "probability") return fockloop::OptimizeObjective::kProbability;
    if (text == "product") return fockloop::OptimizeObjective::kProduct;
    throw std::invalid_argument("--objective: unknown objective '" + text + "'");
}

bool is_stdout(const std::string& path) { return path.empty() || path == "-"; }

// Writes content to path ("-" or empty meaning stdout). Returns false and
// reports on stream failure.
bool write_output(const std::string& path, const std::string& content) {
    if (is_stdout(path)) {
        std::cout << content;
        std::cout.flush();
        if (!std::cout) {
            std::cerr << "fockloop: writing to stdout failed\n";
            return false;
        }
        return true;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "fockloop: cannot open '" << path << "' for writing\n";
        return false;
    }
    out << content;
    out.flush();
    if (!out) {
        std::cerr << "fockloop: writing '" << path << "' failed\n";
        return false;
    }
    return true;
}

struct RunArgs {
    int n = 1;
    double tau = 0.5;
    double eta = 1.0;
    std::string engine = "analytic";
    std::string format = "json";
    std::string out;
};

struct SweepArgs {
    int n = 1;
    std::string tau_grid = "0:1:41";
    std::string eta_grid = "0:1:41";
    std::string metrics = "probability,fidelity,purity";
    std::string format = "csv";
    std::string out;
};

struct OptimizeArgs {
    int n = 1;
    double eta = 1.0;
    std::string objective = "fidelity";
    double tau_resolution = 1e-3;
    std::string format = "json";
    std::string out;
};

struct WignerArgs {
    int n = 0;
    double tau = 0.5;
    double eta = 1.0;
    std::string x_grid = "-5:5:201";
    std::string p_grid = "-5:5:201";
    std::string format = "csv";
    std::string out;
};

struct VerifyArgs {
    int max_n = 4;
    int grid = 9;
    std::string out;
};

int cmd_run(const RunArgs& args) {
    const fockloop::IterationConfig config{
        args.n, fockloop::Transmittance(args.tau), fockloop::Efficiency(args.eta),
        args.engine == "oracle" ? fockloop::StepEngine::kOracle
                                : fockloop::StepEngine::kAnalytic};
    if (config.engine == fockloop::StepEngine::kOracle && args.n > 6) {
        throw std::invalid_argument("run: the oracle engine is capped at --n 6");
    }
    const fockloop::RunSummary summary = config.engine == fockloop::StepEngine::kOracle
                                             ? fockloop::run_oracle_crosscheck(config)
                                             : fockloop::run(config);
    return write_output(args.out, fockloop::run_summary_to_json(config, summary)) ? kExitOk
                                                                                  : kExitRuntime;
}

int cmd_sweep(const SweepArgs& args) {
    fockloop::SweepSpec spec;
    spec.n_pulses = args.n;
    spec.tau_grid = parse_grid(args.tau_grid, "--tau-grid");
    spec.eta_grid = parse_grid(args.eta_grid, "--eta-grid");
    spec.metrics = parse_metrics(args.metrics);

    const std::vector<fockloop::SweepRow> rows = fockloop::run_sweep(spec);
    const std::string body = args.format == "json" ? fockloop::sweep_to_json(spec, rows)
                                                   : fockloop::sweep_to_csv(spec, rows);
    return write_output(args.out, body) ? kExitOk : kExitRuntime;
}

int cmd_optimize(const OptimizeArgs& args) {
    fockloop::OptimizeSpec spec;
    spec.n_pulses = args.n;
    spec.eta = fockloop::Efficiency(args.eta);
    spec.objective = parse_objective(args.objective);
    spec.tau_resolution = args.tau_resolution;

    const fockloop::OptimizeResult result = fockloop::optimize_transmittance(spec);
    return write_output(args.out, fockloop::optimize_result_to_json(spec, result))
               ? kExitOk
               : kExitRuntime;
}

int cmd_wigner(const WignerArgs& args) {
    const fockloop::LinearGrid xg = parse_grid(args.x_grid, "--x-grid");
    const fockloop::LinearGrid pg = parse_grid(args.p_grid, "--p-grid");
    fockloop::PhaseSpaceWindow window;
    window.x_min = xg.start;
    window.x_max = xg.stop;
    window.nx = xg.count;
    window.p_min = pg.start;
    window.p_max = pg.stop;
    window.np = pg.count;

    // --n 0 means no pulses were fed in, so the loop still holds vacuum.
    fockloop::DiagonalFockState state = fockloop::DiagonalFockState::vacuum();
    if (args.n > 0) {
        state = fockloop::run({args.n, fockloop::Transmittance(args.tau),
                               fockloop::Efficiency(args.eta), fockloop::StepEngine::kAnalytic})
                    .final_state;
    }
    const fockloop::PhaseSpaceGrid grid = fockloop::wigner_state(state, window);
    const fockloop::NegativityReport report = fockloop::negativity(grid);

    const std::string csv = fockloop::wigner_grid_to_csv(grid);
    const std::string sidecar = fockloop::negativity_to_json(report);
    if (is_stdout(args.out)) {
        if (!write_output(args.out, csv)) return kExitRuntime;
        std::cerr << sidecar;
        return kExitOk;
    }
    if (!write_output(args.out, csv)) return kExitRuntime;
    if (!write_output(args.out + ".json", sidecar)) return kExitRuntime;
    return kExitOk;
}

int cmd_verify(const VerifyArgs& args) {
    fockloop::VerifySpec spec;
    spec.max_n = args.max_n;
    spec.grid_count = args.grid;

    const fockloop::VerifyReport report = fockloop::verify_equivalence(spec);
    if (!write_output(args.out, fockloop::verify_report_to_text(spec, report))) {
        return kExitRuntime;
    }
    return report.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "fockloop: heralded photon-number states from iterated conditional photon addition"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "fockloop 0.1.0");

    RunArgs run_args;
    CLI::App* run_cmd = app.add_subcommand("run", "Single heralded run, JSON summary");
    run_cmd->add_option("--n", run_args.n, "Number of pulses (target photon number)")
        ->required()
        ->check(CLI::PositiveNumber);
    run_cmd->add_option("--tau", run_args.tau, "Loop splitter transmittance")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    run_cmd->add_option("--eta", run_args.eta, "Detector efficiency")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    run_cmd->add_option("--engine", run_args.engine, "Step backend")
        ->check(CLI::IsMember({"analytic", "oracle"}));
    run_cmd->add_option("--format", run_args.format, "Output format")
        ->check(CLI::IsMember({"json"}));
    run_cmd->add_option("--out", run_args.out, "Output file, - for stdout");

    SweepArgs sweep_args;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Metrics over a (tau, eta) grid");
    sweep_cmd->add_option("--n", sweep_args.n, "Number of pulses")
        ->required()
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--tau-grid", sweep_args.tau_grid, "start:stop:count over [0,1]");
    sweep_cmd->add_option("--eta-grid", sweep_args.eta_grid, "start:stop:count over [0,1]");
    sweep_cmd->add_option("--metrics", sweep_args.metrics,
                          "Comma list of probability,fidelity,purity");
    sweep_cmd->add_option("--format", sweep_args.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sweep_cmd->add_option("--out", sweep_args.out, "Output file, - for stdout");

    OptimizeArgs optimize_args;
    CLI::App* optimize_cmd =
        app.add_subcommand("optimize", "Best transmittance for a scalar objective");
    optimize_cmd->add_option("--n", optimize_args.n, "Number of pulses")
        ->required()
        ->check(CLI::PositiveNumber);
    optimize_cmd->add_option("--eta", optimize_args.eta, "Detector efficiency")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    optimize_cmd->add_option("--objective", optimize_args.objective,
                             "fidelity, probability or product")
        ->check(CLI::IsMember({"fidelity", "probability", "product"}));
    optimize_cmd->add_option("--tau-resolution", optimize_args.tau_resolution,
                             "Scan step in (0, 0.1]");
    optimize_cmd->add_option("--format", optimize_args.format, "Output format")
        ->check(CLI::IsMember({"json"}));
    optimize_cmd->add_option("--out", optimize_args.out, "Output file, - for stdout");

    WignerArgs wigner_args;
    CLI::App* wigner_cmd = app.add_subcommand(
        "wigner", "Wigner grid of the final state (CSV) plus a negativity sidecar (JSON)");
    wigner_cmd->add_option("--n", wigner_args.n, "Number of pulses, 0 exports vacuum")
        ->required()
        ->check(CLI::NonNegativeNumber);
    wigner_cmd->add_option("--tau", wigner_args.tau, "Loop splitter transmittance")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    wigner_cmd->add_option("--eta", wigner_args.eta, "Detector efficiency")
        ->required()
        ->check(CLI::Range(0.0, 1.0));
    wigner_cmd->add_option("--x-grid", wigner_args.x_grid, "start:stop:count for x");
    wigner_cmd->add_option("--p-grid", wigner_args.p_grid, "start:stop:count for p");
    wigner_cmd->add_option("--format", wigner_args.format, "Grid format")
        ->check(CLI::IsMember({"csv"}));
    wigner_cmd->add_option("--out", wigner_args.out,
                           "CSV file; the sidecar goes to FILE.json (stdout: sidecar on stderr)");

    VerifyArgs verify_args;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "Closed forms vs brute-force oracle equivalence");
    verify_cmd->add_option("--max-n", verify_args.max_n, "Largest photon number, at most 6")
        ->check(CLI::Range(0, 6));
    verify_cmd->add_option("--grid", verify_args.grid, "Step-stage grid points per axis")
        ->check(CLI::Range(2, 1000));
    verify_cmd->add_option("--out", verify_args.out, "Report file, - for stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(run_cmd)) return cmd_run(run_args);
        if (app.got_subcommand(sweep_cmd)) return cmd_sweep(sweep_args);
        if (app.got_subcommand(optimize_cmd)) return cmd_optimize(optimize_args);
        if (app.got_subcommand(wigner_cmd)) return cmd_wigner(wigner_args);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(verify_args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "fockloop: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "fockloop: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "fockloop: " << e.what() << "\n";
        return kExitRuntime;
    }
    return kExitUsage;
}
