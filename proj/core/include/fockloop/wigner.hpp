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

#ifndef FOCKLOOP_WIGNER_HPP
#define FOCKLOOP_WIGNER_HPP

#include <vector>

#include "fockloop/fock_state.hpp"

namespace fockloop {

// Phase-space convention: [x, p] = i (hbar = 1), W normalized to
// integral(W dx dp) = 1, vacuum quadrature variance 1/2.

/// Rectangular sampling window. Defaults cover five vacuum widths, enough
/// for states with support up to a handful of photons.
struct PhaseSpaceWindow {
    double x_min = -5.0;
    double x_max = 5.0;
    double p_min = -5.0;
    double p_max = 5.0;
    int nx = 201;
    int np = 201;
};

/// W(x, p) sampled on a uniform grid, x-major.
class PhaseSpaceGrid {
   public:
    PhaseSpaceGrid(const PhaseSpaceWindow& window, std::vector<double> values);

    const PhaseSpaceWindow& window() const { return window_; }
    double x_at(int ix) const;
    double p_at(int ip) const;
    double value(int ix, int ip) const;
    const std::vector<double>& values() const { return values_; }

    double dx() const;
    double dp() const;

   private:
    PhaseSpaceWindow window_;
    std::vector<double> values_;
};

struct NegativityReport {
    double min_value;        // smallest sampled W value
    double integral;         // trapezoidal estimate of integral(W), ~1
    double negative_volume;  // trapezoidal estimate of integral(max(-W, 0))
};

/// Wigner function of the photon number state |n>:
///   W_n(x, p) = (-1)^n / pi * exp(-(x^2 + p^2)) * L_n(2 (x^2 + p^2)),
/// Laguerre polynomial evaluated by the three-term recurrence.
double wigner_fock(int n, double x, double p);

/// Wigner function of a diagonal mixture, the probability-weighted sum of
/// the pure W_n, sampled over the window.
PhaseSpaceGrid wigner_state(const DiagonalFockState& state, const PhaseSpaceWindow& window = {});

/// Minimum, total integral and negative volume by trapezoidal quadrature.
/// Throws std::runtime_error when the integral misses 1 by more than 0.05,
/// meaning the grid is too coarse or too small for the sampled state.
NegativityReport negativity(const PhaseSpaceGrid& grid);

}  // namespace fockloop

#endif  // FOCKLOOP_WIGNER_HPP
