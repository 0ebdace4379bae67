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

#include "fockloop/sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "fockloop/loop.hpp"

namespace fockloop {

namespace {

void validate_unit_grid(const LinearGrid& grid, const char* name) {
    if (grid.count < 2) {
        throw std::invalid_argument(std::string(name) + ": grid needs at least 2 points");
    }
    if (!(grid.start >= 0.0 && grid.start <= 1.0 && grid.stop >= 0.0 && grid.stop <= 1.0)) {
        throw std::invalid_argument(std::string(name) + ": grid bounds outside [0, 1]");
    }
}

SweepRow evaluate_sweep_point(int n_pulses, double tau, double eta) {
    constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
    try {
        const RunSummary summary =
            run({n_pulses, Transmittance(tau), Efficiency(eta), StepEngine::kAnalytic});
        return SweepRow{tau, eta, summary.p_net.value(), summary.fidelity.value(),
                        summary.purity.value()};
    } catch (const std::domain_error&) {
        // Dead heralded branch (only possible at degenerate grid corners):
        // nothing to normalize, so the state metrics are undefined.
        return SweepRow{tau, eta, 0.0, kNaN, kNaN};
    }
}

}  // namespace

int resolve_worker_count(int requested) {
    int workers = requested > 0 ? requested : static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;

    if (const char* env = std::getenv("FOCKLOOP_THREADS"); env != nullptr && *env != '\0') {
        char* end = nullptr;
        const long cap = std::strtol(env, &end, 10);
        if (end != nullptr && *end == '\0' && cap > 0) {
            workers = static_cast<int>(std::min<long>(workers, cap));
        }
    }
    return workers;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, int workers) {
    if (spec.n_pulses < 1) {
        throw std::invalid_argument("run_sweep: n_pulses must be at least 1");
    }
    validate_unit_grid(spec.tau_grid, "run_sweep: tau");
    validate_unit_grid(spec.eta_grid, "run_sweep: eta");

    const int n_tau = spec.tau_grid.count;
    const int n_eta = spec.eta_grid.count;
    const int total = n_tau * n_eta;
    std::vector<SweepRow> rows(static_cast<std::size_t>(total));

    auto fill = [&](int flat) {
        const int it = flat / n_eta;
        const int ie = flat % n_eta;
        rows[static_cast<std::size_t>(flat)] =
            evaluate_sweep_point(spec.n_pulses, spec.tau_grid.at(it), spec.eta_grid.at(ie));
    };

    const int pool = std::min(resolve_worker_count(workers), total);
    if (pool <= 1) {
        for (int flat = 0; flat < total; ++flat) fill(flat);
        return rows;
    }

    // Rows land at their flat index, so the output order is identical to the
    // serial path no matter how the pool interleaves.
    std::atomic<int> next{0};
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(pool));
    for (int t = 0; t < pool; ++t) {
        threads.emplace_back([&] {
            for (int flat = next.fetch_add(1); flat < total; flat = next.fetch_add(1)) {
                fill(flat);
            }
        });
    }
    for (std::thread& t : threads) t.join();
    return rows;
}

double evaluate_objective(int n_pulses, Transmittance tau, Efficiency eta,
                          OptimizeObjective objective) {
    const RunSummary summary = run({n_pulses, tau, eta, StepEngine::kAnalytic});
    switch (objective) {
        case OptimizeObjective::kFidelity:
            return summary.fidelity.value();
        case OptimizeObjective::kProbability:
            return summary.p_net.value();
        case OptimizeObjective::kProduct:
            return summary.fidelity.value() * summary.p_net.value();
    }
    throw std::invalid_argument("evaluate_objective: unknown objective");
}

OptimizeResult optimize_transmittance(const OptimizeSpec& spec) {
    if (spec.n_pulses < 1) {
        throw std::invalid_argument("optimize_transmittance: n_pulses must be at least 1");
    }
    if (!(spec.tau_resolution > 0.0 && spec.tau_resolution <= 0.1)) {
        throw std::invalid_argument("optimize_transmittance: tau_resolution outside (0, 0.1]");
    }

    OptimizeResult result;

    // Interior scan: tau = res, 2*res, ..., up to 1 - res. The endpoints are
    // excluded, where the heralded branch can die.
    const double res = spec.tau_resolution;
    const int count = static_cast<int>(std::lround(1.0 / res)) - 1;
    result.curve.reserve(static_cast<std::size_t>(count));

    double best_tau = std::numeric_limits<double>::quiet_NaN();
    double best_value = -std::numeric_limits<double>::infinity();
    auto consider = [&](double tau, double value) {
        if (value > best_value || (value == best_value && tau < best_tau)) {
            best_value = value;
            best_tau = tau;
        }
    };

    double scan_min = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= count; ++i) {
        const double tau = res * static_cast<double>(i);
        if (tau >= 1.0) break;
        const double value =
            evaluate_objective(spec.n_pulses, Transmittance(tau), spec.eta, spec.objective);
        result.curve.push_back(OptimizePoint{tau, value});
        consider(tau, value);
        if (value < scan_min) scan_min = value;
    }

    const double spread = best_value - scan_min;
    if (spread <= 1e-12 * std::max(1.0, std::abs(best_value))) {
        result.degenerate_flat = true;
        result.objective_value = best_value;
        return result;
    }

    // Golden-section refinement of the one-resolution bracket around the scan
    // argmax. Every probe also goes through consider(), so the returned point
    // is the best one actually evaluated.
    double lo = std::max(best_tau - res, res * 0.5);
    double hi = std::min(best_tau + res, 1.0 - res * 0.5);
    constexpr double kGolden = 0.6180339887498949;
    auto probe = [&](double tau) {
        const double value =
            evaluate_objective(spec.n_pulses, Transmittance(tau), spec.eta, spec.objective);
        consider(tau, value);
        return value;
    };
    double x1 = hi - kGolden * (hi - lo);
    double x2 = lo + kGolden * (hi - lo);
    double f1 = probe(x1);
    double f2 = probe(x2);
    while (hi - lo > 1e-10) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + kGolden * (hi - lo);
            f2 = probe(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - kGolden * (hi - lo);
            f1 = probe(x1);
        }
    }

    result.tau_star = best_tau;
    result.objective_value = best_value;
    return result;
}

}  // namespace fockloop
