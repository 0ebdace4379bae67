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

#ifndef FOCKLOOP_ORACLE_HPP
#define FOCKLOOP_ORACLE_HPP

#include <utility>
#include <vector>

#include "fockloop/fock_state.hpp"
#include "fockloop/step.hpp"
#include "fockloop/types.hpp"

// Brute-force three-mode state-vector simulator. It rebuilds the single-step
// pipeline by explicit operator expansion on truncated Fock basis states and
// exists to validate the closed forms in step.hpp, not to be fast.

namespace fockloop {

// Mode layout used throughout: 0 = loop mode, 1 = detector arm, 2 = vacuum
// ancilla of the detector-loss splitter.
inline constexpr int kLoopMode = 0;
inline constexpr int kDetectorMode = 1;
inline constexpr int kLossMode = 2;

/// Pure state of three modes with per-mode photon cutoff. All beam splitter
/// matrices involved are real orthogonal, so amplitudes stay real (signed).
class ThreeModeState {
   public:
    /// Zero state with photon numbers 0..cutoff allowed per mode.
    explicit ThreeModeState(int cutoff);

    int cutoff() const { return cutoff_; }

    double amplitude(int n1, int n2, int n3) const { return amps_[index(n1, n2, n3)]; }
    void set_amplitude(int n1, int n2, int n3, double value) { amps_[index(n1, n2, n3)] = value; }

    double squared_norm() const;

    const std::vector<double>& amplitudes() const { return amps_; }

    std::size_t index(int n1, int n2, int n3) const;

   private:
    int cutoff_;
    std::vector<double> amps_;
};

/// Which off-diagonal entry of the 2x2 mixing matrix carries the minus sign.
enum class BeamSplitterSign {
    kPositiveRotation,  // [[ c, -s], [ s, c]]
    kNegativeRotation,  // [[ c,  s], [-s, c]]
};

/// Two-mode mixing acting on (mode_a, mode_b): with c = sqrt(t) and
/// s = sqrt(1-t), the input creation operator of mode_a maps to
/// m00*A + m01*B and that of mode_b to m10*A + m11*B, A/B being the output
/// creation operators of mode_a/mode_b.
struct BeamSplitterSpec {
    int mode_a;
    int mode_b;
    double transmittance;
    BeamSplitterSign sign;
};

/// The loop beam splitter: mixes loop and detector modes, minus sign on the
/// reflected part of the loop-mode operator.
BeamSplitterSpec main_beam_splitter(Transmittance tau);

/// The detector-loss splitter: mixes detector and loss modes with
/// transmittance eta, minus sign on the loss-mode row.
BeamSplitterSpec loss_beam_splitter(Efficiency eta);

/// |n, 1, 0>: n photons circulating, one fresh photon arriving, loss ancilla
/// in vacuum. Requires cutoff >= n + 1 so the splitter output still fits.
ThreeModeState prepare_input(int n, int cutoff);

/// Applies the two-mode expansion of the splitter to every populated basis
/// state. Total photon number is conserved exactly; a populated state whose
/// pair total exceeds the cutoff is an error rather than a silent truncation.
ThreeModeState apply_beam_splitter(const ThreeModeState& state, const BeamSplitterSpec& spec);

/// Zeroes every amplitude with photons in the detector mode and returns the
/// surviving (unnormalized) state plus its squared norm, the no-click
/// probability.
std::pair<ThreeModeState, Probability> project_detector_vacuum(const ThreeModeState& state);

/// Reduces a detector-vacuum state to the loop mode. weight[j] = sum over
/// loss-mode occupations of |amp(j, 0, l)|^2; each (j, l) pair here stems
/// from a single amplitude, so the reduced state is diagonal and nothing is
/// lost by returning only the diagonal.
DiagonalFockState trace_out_loss_mode(const ThreeModeState& state);

/// Full single-step pipeline on |n,1,0>. cutoff < 0 picks n + 2.
StepCoefficients oracle_single_step(int n, Transmittance tau, Efficiency eta, int cutoff = -1);

}  // namespace fockloop

#endif  // FOCKLOOP_ORACLE_HPP
