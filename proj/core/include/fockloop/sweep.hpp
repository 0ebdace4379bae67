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

#ifndef FOCKLOOP_SWEEP_HPP
#define FOCKLOOP_SWEEP_HPP

#include <limits>
#include <vector>

#include "fockloop/types.hpp"

namespace fockloop {

/// Inclusive linspace over [start, stop] with count >= 2 points.
struct LinearGrid {
    double start = 0.0;
    double stop = 1.0;
    int count = 2;

    double at(int i) const { return start + (stop - start) * i / (count - 1); }
};

struct MetricSelection {
    bool probability = true;
    bool fidelity = true;
    bool purity = true;
};

struct SweepSpec {
    int n_pulses = 1;
    LinearGrid tau_grid{0.0, 1.0, 41};
    LinearGrid eta_grid{0.0, 1.0, 41};
    MetricSelection metrics{};
};

/// One (tau, eta) grid point. Where post-selection is impossible (the run
/// hits a zero-probability branch at a degenerate corner) p_net is 0 and
/// fidelity/purity are NaN; there is no heralded state to measure.
struct SweepRow {
    double tau;
    double eta;
    double p_net;
    double fidelity;
    double purity;
};

/// Evaluates the full grid, tau-major, in deterministic row order. workers
/// <= 0 resolves the worker count from hardware; the FOCKLOOP_THREADS
/// environment variable caps it (0 or unset = no cap).
std::vector<SweepRow> run_sweep(const SweepSpec& spec, int workers = 0);

int resolve_worker_count(int requested);

enum class OptimizeObjective {
    kFidelity,
    kProbability,
    kProduct,  // fidelity * probability
};

struct OptimizeSpec {
    int n_pulses = 1;
    Efficiency eta{1.0};
    OptimizeObjective objective = OptimizeObjective::kFidelity;
    double tau_resolution = 1e-3;  // scan step, in (0, 0.1]
};

struct OptimizePoint {
    double tau;
    double value;
};

struct OptimizeResult {
    bool degenerate_flat = false;  // objective constant over the scan; tau_star meaningless
    double tau_star = std::numeric_limits<double>::quiet_NaN();
    double objective_value = std::numeric_limits<double>::quiet_NaN();
    std::vector<OptimizePoint> curve;  // the scan samples, ascending tau
};

double evaluate_objective(int n_pulses, Transmittance tau, Efficiency eta,
                          OptimizeObjective objective);

/// Scans tau over (0, 1) at tau_resolution, then refines the best bracket by
/// golden-section search. Returns the best evaluated point; ties break
/// toward smaller tau. A flat scan is reported as degenerate instead of an
/// arbitrary argmax.
OptimizeResult optimize_transmittance(const OptimizeSpec& spec);

}  // namespace fockloop

#endif  // FOCKLOOP_SWEEP_HPP
