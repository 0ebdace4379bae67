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

#include "fockloop/loop.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fockloop/oracle.hpp"
#include "fockloop/step.hpp"

namespace fockloop {

namespace {

// Below this the no-click branch is treated as dead: normalizing by it would
// only amplify rounding noise into a meaningless state.
constexpr double kDeadBranchThreshold = 1e-300;

}  // namespace

StepResult mixed_step(const DiagonalFockState& state, Transmittance tau, Efficiency eta,
                      StepEngine engine, int index) {
    const std::vector<double>& weights = state.probs();
    std::vector<double> mixed(weights.size() + 1, 0.0);
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (weights[k] == 0.0) continue;
        const int photons = static_cast<int>(k);
        const StepCoefficients sc = engine == StepEngine::kAnalytic
                                        ? step_coefficients(photons, tau, eta)
                                        : oracle_single_step(photons, tau, eta);
        for (std::size_t j = 0; j < sc.c.size(); ++j) {
            mixed[j] += weights[k] * sc.c[j];
        }
    }

    double p = 0.0;
    for (double w : mixed) p += w;
    if (p <= kDeadBranchThreshold) {
        throw std::domain_error("mixed_step: no-click probability vanishes at pulse " +
                                std::to_string(index) + "; the heralded branch is dead");
    }
    auto [normalized, norm] = normalize(DiagonalFockState(std::move(mixed)));
    return StepResult{index, norm, std::move(normalized)};
}

RunSummary run(const IterationConfig& config) {
    if (config.n_pulses < 1) {
        throw std::invalid_argument("run: n_pulses must be at least 1");
    }

    DiagonalFockState state = DiagonalFockState::vacuum();
    std::vector<StepResult> steps;
    steps.reserve(static_cast<std::size_t>(config.n_pulses));
    double p_net = 1.0;
    for (int pulse = 1; pulse <= config.n_pulses; ++pulse) {
        StepResult result = mixed_step(state, config.tau, config.eta, config.engine, pulse);
        p_net *= result.p_conditional.value();
        state = result.state_after;
        steps.push_back(std::move(result));
    }

    const FidelityValue fid = fidelity_to_fock(state, config.n_pulses);
    const PurityValue pur = purity(state);
    return RunSummary{std::move(steps), Probability(p_net), fid, pur, std::move(state)};
}

RunSummary run_oracle_crosscheck(IterationConfig config) {
    if (config.n_pulses > 6) {
        throw std::invalid_argument(
            "run_oracle_crosscheck: brute-force engine capped at 6 pulses, got " +
            std::to_string(config.n_pulses));
    }
    config.engine = StepEngine::kOracle;
    return run(config);
}

}  // namespace fockloop
