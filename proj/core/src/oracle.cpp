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

#include "fockloop/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fockloop/math.hpp"

namespace fockloop {

namespace {

void require_mode(int mode, const char* what) {
    if (mode < 0 || mode > 2) {
        throw std::invalid_argument(std::string(what) + ": mode index " + std::to_string(mode) +
                                    " outside 0..2");
    }
}

// sqrt(pa! pb! / (na! nb!)), the normalization ratio between the input
// basis state and one output monomial.
double norm_ratio(int na, int nb, int pa, int pb) {
    return std::exp(0.5 * (log_factorial(pa) + log_factorial(pb) - log_factorial(na) -
                           log_factorial(nb)));
}

}  // namespace

ThreeModeState::ThreeModeState(int cutoff) : cutoff_(cutoff) {
    if (cutoff < 0) {
        throw std::invalid_argument("ThreeModeState: negative cutoff");
    }
    const std::size_t dim = static_cast<std::size_t>(cutoff) + 1;
    amps_.assign(dim * dim * dim, 0.0);
}

std::size_t ThreeModeState::index(int n1, int n2, int n3) const {
    if (n1 < 0 || n1 > cutoff_ || n2 < 0 || n2 > cutoff_ || n3 < 0 || n3 > cutoff_) {
        throw std::out_of_range("ThreeModeState: photon numbers (" + std::to_string(n1) + ", " +
                                std::to_string(n2) + ", " + std::to_string(n3) +
                                ") outside cutoff " + std::to_string(cutoff_));
    }
    const std::size_t dim = static_cast<std::size_t>(cutoff_) + 1;
    return (static_cast<std::size_t>(n1) * dim + static_cast<std::size_t>(n2)) * dim +
           static_cast<std::size_t>(n3);
}

double ThreeModeState::squared_norm() const {
    double total = 0.0;
    for (double a : amps_) total += a * a;
    return total;
}

BeamSplitterSpec main_beam_splitter(Transmittance tau) {
    return BeamSplitterSpec{kLoopMode, kDetectorMode, tau.value(),
                            BeamSplitterSign::kPositiveRotation};
}

BeamSplitterSpec loss_beam_splitter(Efficiency eta) {
    return BeamSplitterSpec{kDetectorMode, kLossMode, eta.value(),
                            BeamSplitterSign::kNegativeRotation};
}

ThreeModeState prepare_input(int n, int cutoff) {
    if (n < 0) throw std::invalid_argument("prepare_input: negative photon number");
    if (n + 1 > cutoff) {
        throw std::invalid_argument("prepare_input: cutoff " + std::to_string(cutoff) +
                                    " too small for " + std::to_string(n) +
                                    " photons plus one (splitter output would not fit)");
    }
    ThreeModeState state(cutoff);
    state.set_amplitude(n, 1, 0, 1.0);
    return state;
}

ThreeModeState apply_beam_splitter(const ThreeModeState& state, const BeamSplitterSpec& spec) {
    require_mode(spec.mode_a, "apply_beam_splitter");
    require_mode(spec.mode_b, "apply_beam_splitter");
    if (spec.mode_a == spec.mode_b) {
        throw std::invalid_argument("apply_beam_splitter: the two modes must differ");
    }
    if (!(spec.transmittance >= 0.0 && spec.transmittance <= 1.0)) {
        throw std::invalid_argument("apply_beam_splitter: transmittance outside [0,1]");
    }

    const double c = std::sqrt(spec.transmittance);
    const double s = std::sqrt(1.0 - spec.transmittance);
    const bool positive = spec.sign == BeamSplitterSign::kPositiveRotation;
    const double m00 = c;
    const double m01 = positive ? -s : s;
    const double m10 = positive ? s : -s;
    const double m11 = c;

    const int K = state.cutoff();
    ThreeModeState out(K);
    for (int n1 = 0; n1 <= K; ++n1) {
        for (int n2 = 0; n2 <= K; ++n2) {
            for (int n3 = 0; n3 <= K; ++n3) {
                const double amp = state.amplitude(n1, n2, n3);
                if (amp == 0.0) continue;
                int occ[3] = {n1, n2, n3};
                const int na = occ[spec.mode_a];
                const int nb = occ[spec.mode_b];
                if (na + nb > K) {
                    throw std::domain_error(
                        "apply_beam_splitter: output would exceed the cutoff (" +
                        std::to_string(na) + " + " + std::to_string(nb) + " photons vs cutoff " +
                        std::to_string(K) + ")");
                }
                // (m00 A + m01 B)^na (m10 A + m11 B)^nb expanded over output
                // occupations; total photon number na + nb is preserved.
                for (int i = 0; i <= na; ++i) {
                    for (int j = 0; j <= nb; ++j) {
                        const int pa = i + j;
                        const int pb = na + nb - pa;
                        const double coeff = binomial(na, i) * binomial(nb, j) *
                                             std::pow(m00, i) * std::pow(m01, na - i) *
                                             std::pow(m10, j) * std::pow(m11, nb - j) *
                                             norm_ratio(na, nb, pa, pb);
                        occ[spec.mode_a] = pa;
                        occ[spec.mode_b] = pb;
                        const double prev = out.amplitude(occ[0], occ[1], occ[2]);
                        out.set_amplitude(occ[0], occ[1], occ[2], prev + amp * coeff);
                    }
                }
            }
        }
    }
    return out;
}

std::pair<ThreeModeState, Probability> project_detector_vacuum(const ThreeModeState& state) {
    const int K = state.cutoff();
    ThreeModeState kept(K);
    double prob = 0.0;
    for (int n1 = 0; n1 <= K; ++n1) {
        for (int n3 = 0; n3 <= K; ++n3) {
            const double amp = state.amplitude(n1, 0, n3);
            if (amp == 0.0) continue;
            kept.set_amplitude(n1, 0, n3, amp);
            prob += amp * amp;
        }
    }
    return {std::move(kept), Probability(prob)};
}

DiagonalFockState trace_out_loss_mode(const ThreeModeState& state) {
    const int K = state.cutoff();
    for (int n1 = 0; n1 <= K; ++n1) {
        for (int n2 = 1; n2 <= K; ++n2) {
            for (int n3 = 0; n3 <= K; ++n3) {
                if (state.amplitude(n1, n2, n3) != 0.0) {
                    throw std::domain_error(
                        "trace_out_loss_mode: state still has photons in the detector mode; "
                        "project onto detector vacuum first");
                }
            }
        }
    }
    std::vector<double> weights(static_cast<std::size_t>(K) + 1, 0.0);
    for (int n1 = 0; n1 <= K; ++n1) {
        for (int n3 = 0; n3 <= K; ++n3) {
            const double amp = state.amplitude(n1, 0, n3);
            weights[static_cast<std::size_t>(n1)] += amp * amp;
        }
    }
    return DiagonalFockState(std::move(weights));
}

StepCoefficients oracle_single_step(int n, Transmittance tau, Efficiency eta, int cutoff) {
    const int K = cutoff < 0 ? n + 2 : cutoff;
    ThreeModeState state = prepare_input(n, K);
    state = apply_beam_splitter(state, main_beam_splitter(tau));
    state = apply_beam_splitter(state, loss_beam_splitter(eta));
    auto [kept, p_noclick] = project_detector_vacuum(state);
    DiagonalFockState reduced = trace_out_loss_mode(kept);

    // The pipeline populates photon numbers 0..n+1 only; everything above is
    // identically zero and dropped.
    std::vector<double> c(reduced.probs().begin(),
                          reduced.probs().begin() + static_cast<std::ptrdiff_t>(n) + 2);
    return StepCoefficients{std::move(c), p_noclick};
}

}  // namespace fockloop
