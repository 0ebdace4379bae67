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

#include "fockloop/fock_state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fockloop {

DiagonalFockState::DiagonalFockState(std::vector<double> probs) : probs_(std::move(probs)) {
    if (probs_.empty()) {
        throw std::invalid_argument("DiagonalFockState: need at least the vacuum entry");
    }
    for (std::size_t i = 0; i < probs_.size(); ++i) {
        double& w = probs_[i];
        if (std::isnan(w)) {
            throw std::invalid_argument("DiagonalFockState: NaN weight at photon number " +
                                        std::to_string(i));
        }
        if (w < -kUnitSlack) {
            throw std::invalid_argument("DiagonalFockState: weight " + std::to_string(w) +
                                        " at photon number " + std::to_string(i) +
                                        " is negative beyond tolerance");
        }
        if (w < 0.0) w = 0.0;
    }
}

DiagonalFockState DiagonalFockState::fock(int n) {
    if (n < 0) throw std::invalid_argument("DiagonalFockState::fock: negative photon number");
    std::vector<double> probs(static_cast<std::size_t>(n) + 1, 0.0);
    probs.back() = 1.0;
    return DiagonalFockState(std::move(probs));
}

double DiagonalFockState::prob(int n) const {
    if (n < 0) throw std::invalid_argument("DiagonalFockState::prob: negative photon number");
    if (n > cutoff()) return 0.0;
    return probs_[static_cast<std::size_t>(n)];
}

double DiagonalFockState::sum() const {
    double total = 0.0;
    for (double w : probs_) total += w;
    return total;
}

std::pair<DiagonalFockState, Probability> normalize(const DiagonalFockState& state) {
    double total = state.sum();
    if (total <= 0.0) {
        throw std::domain_error("normalize: all-zero state has no normalized form");
    }
    std::vector<double> scaled = state.probs();
    for (double& w : scaled) w /= total;
    return {DiagonalFockState(std::move(scaled)), Probability(total)};
}

PurityValue purity(const DiagonalFockState& state) {
    double total = 0.0;
    for (double w : state.probs()) total += w * w;
    return PurityValue(total);
}

FidelityValue fidelity_to_fock(const DiagonalFockState& state, int target) {
    if (target < 0) throw std::invalid_argument("fidelity_to_fock: negative target");
    if (target > state.cutoff()) {
        throw std::domain_error("fidelity_to_fock: target " + std::to_string(target) +
                                " exceeds cutoff " + std::to_string(state.cutoff()));
    }
    return FidelityValue(state.probs()[static_cast<std::size_t>(target)]);
}

}  // namespace fockloop
