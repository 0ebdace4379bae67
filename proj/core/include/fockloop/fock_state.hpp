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

#ifndef FOCKLOOP_FOCK_STATE_HPP
#define FOCKLOOP_FOCK_STATE_HPP

#include <utility>
#include <vector>

#include "fockloop/types.hpp"

namespace fockloop {

/// Single-mode state that is diagonal in the photon number basis: a weight
/// per photon number 0..cutoff. The feedback loop never creates coherences,
/// so this probability vector is a complete description of the loop mode.
///
/// Entries may hold an unnormalized weight vector between pipeline stages;
/// normalize() turns it into a distribution and reports the discarded norm.
class DiagonalFockState {
   public:
    /// Weights indexed by photon number. Entries within kUnitSlack below zero
    /// are clamped to exactly 0; more negative entries are rejected.
    explicit DiagonalFockState(std::vector<double> probs);

    static DiagonalFockState vacuum() { return DiagonalFockState({1.0}); }
    static DiagonalFockState fock(int n);

    /// Largest representable photon number.
    int cutoff() const { return static_cast<int>(probs_.size()) - 1; }

    /// Weight on |n>. Exactly 0 above the cutoff.
    double prob(int n) const;

    const std::vector<double>& probs() const { return probs_; }

    double sum() const;

   private:
    std::vector<double> probs_;
};

/// Rescales to unit sum and returns the original sum, the probability weight
/// carried by the unnormalized vector. Throws std::domain_error on an
/// all-zero input.
std::pair<DiagonalFockState, Probability> normalize(const DiagonalFockState& state);

/// Tr rho^2 = sum of squared probabilities. Expects a normalized state.
PurityValue purity(const DiagonalFockState& state);

/// Fidelity to the photon number state |target>. For diagonal states this is
/// just the weight on the target photon number.
FidelityValue fidelity_to_fock(const DiagonalFockState& state, int target);

}  // namespace fockloop

#endif  // FOCKLOOP_FOCK_STATE_HPP
