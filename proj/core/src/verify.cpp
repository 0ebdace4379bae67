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

#include "fockloop/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "fockloop/loop.hpp"
#include "fockloop/oracle.hpp"
#include "fockloop/report.hpp"
#include "fockloop/step.hpp"
#include "fockloop/sweep.hpp"

namespace fockloop {

namespace {

double step_deviation(int n, double tau, double eta) {
    const StepCoefficients analytic = step_coefficients(n, Transmittance(tau), Efficiency(eta));
    const StepCoefficients oracle = oracle_single_step(n, Transmittance(tau), Efficiency(eta));

    double dev = std::abs(analytic.p_noclick.value() - oracle.p_noclick.value());
    const double pa = analytic.p_noclick.value();
    const double po = oracle.p_noclick.value();
    for (std::size_t j = 0; j < analytic.c.size(); ++j) {
        dev = std::max(dev, std::abs(analytic.c[j] / pa - oracle.c[j] / po));
    }
    return dev;
}

double run_deviation(int n_pulses, double tau, double eta) {
    const IterationConfig config{n_pulses, Transmittance(tau), Efficiency(eta),
                                 StepEngine::kAnalytic};
    const RunSummary analytic = run(config);
    const RunSummary oracle = run_oracle_crosscheck(config);

    double dev = std::abs(analytic.p_net.value() - oracle.p_net.value());
    dev = std::max(dev, std::abs(analytic.fidelity.value() - oracle.fidelity.value()));
    dev = std::max(dev, std::abs(analytic.purity.value() - oracle.purity.value()));
    for (int i = 0; i < n_pulses; ++i) {
        const std::size_t at = static_cast<std::size_t>(i);
        dev = std::max(dev, std::abs(analytic.steps[at].p_conditional.value() -
                                     oracle.steps[at].p_conditional.value()));
    }
    const std::vector<double>& pa = analytic.final_state.probs();
    const std::vector<double>& po = oracle.final_state.probs();
    const std::size_t shared = std::min(pa.size(), po.size());
    for (std::size_t j = 0; j < shared; ++j) {
        dev = std::max(dev, std::abs(pa[j] - po[j]));
    }
    for (std::size_t j = shared; j < pa.size(); ++j) dev = std::max(dev, std::abs(pa[j]));
    for (std::size_t j = shared; j < po.size(); ++j) dev = std::max(dev, std::abs(po[j]));
    return dev;
}

}  // namespace

double VerifyReport::max_deviation() const {
    return std::max(max_step_deviation, max_run_deviation);
}

VerifyReport verify_equivalence(const VerifySpec& spec) {
    if (spec.max_n < 0 || spec.max_n > 6) {
        throw std::invalid_argument("verify_equivalence: max_n outside 0..6");
    }
    if (spec.grid_count < 2) {
        throw std::invalid_argument("verify_equivalence: grid_count must be at least 2");
    }
    if (!(spec.threshold > 0.0)) {
        throw std::invalid_argument("verify_equivalence: threshold must be positive");
    }

    VerifyReport report;
    report.threshold = spec.threshold;

    const LinearGrid grid{0.05, 0.95, spec.grid_count};
    for (int n = 0; n <= spec.max_n; ++n) {
        for (int it = 0; it < grid.count; ++it) {
            for (int ie = 0; ie < grid.count; ++ie) {
                const double tau = grid.at(it);
                const double eta = grid.at(ie);
                const double dev = step_deviation(n, tau, eta);
                report.max_step_deviation = std::max(report.max_step_deviation, dev);
                if (dev >= spec.threshold) {
                    report.failures.push_back(VerifyDeviation{"step", n, tau, eta, dev});
                }
            }
        }
    }

    const LinearGrid run_grid{0.05, 0.95, 5};
    const int max_pulses = std::min(spec.max_n, 4);
    for (int n_pulses = 1; n_pulses <= max_pulses; ++n_pulses) {
        for (int it = 0; it < run_grid.count; ++it) {
            for (int ie = 0; ie < run_grid.count; ++ie) {
                const double tau = run_grid.at(it);
                const double eta = run_grid.at(ie);
                const double dev = run_deviation(n_pulses, tau, eta);
                report.max_run_deviation = std::max(report.max_run_deviation, dev);
                if (dev >= spec.threshold) {
                    report.failures.push_back(VerifyDeviation{"run", n_pulses, tau, eta, dev});
                }
            }
        }
    }
    return report;
}

std::string verify_report_to_text(const VerifySpec& spec, const VerifyReport& report) {
    std::string out;
    out += "closed-form vs brute-force equivalence\n";
    out += "  single steps: n = 0.." + std::to_string(spec.max_n) + " on a " +
           std::to_string(spec.grid_count) + "x" + std::to_string(spec.grid_count) +
           " (tau, eta) grid\n";
    out += "  full runs:    n_pulses = 1.." + std::to_string(std::min(spec.max_n, 4)) +
           " on a 5x5 grid\n";
    out += "  max step deviation: " + format_double(report.max_step_deviation) + "\n";
    out += "  max run deviation:  " + format_double(report.max_run_deviation) + "\n";
    out += "  threshold:          " + format_double(report.threshold) + "\n";
    if (report.passed()) {
        out += "PASS\n";
        return out;
    }
    out += "FAIL (" + std::to_string(report.failures.size()) + " offending points)\n";
    const std::size_t shown = std::min<std::size_t>(report.failures.size(), 20);
    for (std::size_t i = 0; i < shown; ++i) {
        const VerifyDeviation& f = report.failures[i];
        out += "  " + f.stage + " n=" + std::to_string(f.n) + " tau=" + format_double(f.tau) +
               " eta=" + format_double(f.eta) + " deviation=" + format_double(f.deviation) + "\n";
    }
    if (report.failures.size() > shown) {
        out += "  ... " + std::to_string(report.failures.size() - shown) + " more\n";
    }
    return out;
}

}  // namespace fockloop
