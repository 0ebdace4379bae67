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

#ifndef FOCKLOOP_LOOP_HPP
#define FOCKLOOP_LOOP_HPP

#include <vector>

#include "fockloop/fock_state.hpp"
#include "fockloop/types.hpp"

namespace fockloop {

/// Which single-step backend feeds the iteration.
enum class StepEngine {
    kAnalytic,  // closed forms from step.hpp
    kOracle,    // brute-force three-mode simulation
};

struct IterationConfig {
    int n_pulses = 1;  // number of single-photon pulses fed into the loop
    Transmittance tau{0.5};
    Efficiency eta{1.0};
    StepEngine engine = StepEngine::kAnalytic;
};

struct StepResult {
    int index;                      // 1-based pulse number
    Probability p_conditional;      // no-click probability of this step
    DiagonalFockState state_after;  // normalized loop state after the step
};

struct RunSummary {
    std::vector<StepResult> steps;
    Probability p_net;       // product of the per-step conditionals
    FidelityValue fidelity;  // weight on |n_pulses> in the final state
    PurityValue purity;
    DiagonalFockState final_state;
};

/// One conditional photon addition applied to a photon-number mixture: each
/// k-photon component goes through the single-step pipeline and the diagonal
/// outputs are combined with the component weights. Detection and the loss
/// trace are linear, so mixing the per-component results before normalizing
/// is exact.
///
/// Throws std::domain_error when the mixed no-click probability underflows
/// (post-selection impossible, e.g. a fully transmitting splitter feeding an
/// ideal detector).
StepResult mixed_step(const DiagonalFockState& state, Transmittance tau, Efficiency eta,
                      StepEngine engine = StepEngine::kAnalytic, int index = 1);

/// Runs the loop: vacuum in, n_pulses conditional additions, every detection
/// silent. With an ideal detector the final state is exactly |n_pulses>.
RunSummary run(const IterationConfig& config);

/// Same run forced through the brute-force engine (n_pulses <= 6). Every
/// field must agree with the analytic run; tests assert the agreement.
RunSummary run_oracle_crosscheck(IterationConfig config);

}  // namespace fockloop

#endif  // FOCKLOOP_LOOP_HPP
