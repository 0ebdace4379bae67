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

#include "fockloop/wigner.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fockloop {

namespace {

void validate_window(const PhaseSpaceWindow& w) {
    if (!(std::isfinite(w.x_min) && std::isfinite(w.x_max) && std::isfinite(w.p_min) &&
          std::isfinite(w.p_max))) {
        throw std::invalid_argument("phase-space window bounds must be finite");
    }
    if (!(w.x_max > w.x_min) || !(w.p_max > w.p_min)) {
        throw std::invalid_argument("phase-space window must have positive extent");
    }
    if (w.nx < 2 || w.np < 2) {
        throw std::invalid_argument("phase-space window needs at least 2 samples per axis");
    }
}

// Weighted sum over the mixture sharing one Laguerre recurrence per point.
// z = 2 (x^2 + p^2); term k contributes probs[k] * (-1)^k * L_k(z).
double mixture_series(const std::vector<double>& probs, double z) {
    double sum = probs[0];
    if (probs.size() == 1) return sum;
    double lprev = 1.0;      // L_0
    double lcur = 1.0 - z;   // L_1
    double sign = -1.0;
    sum += sign * probs[1] * lcur;
    for (std::size_t k = 2; k < probs.size(); ++k) {
        const double kd = static_cast<double>(k - 1);
        const double lnext = ((2.0 * kd + 1.0 - z) * lcur - kd * lprev) / (kd + 1.0);
        lprev = lcur;
        lcur = lnext;
        sign = -sign;
        sum += sign * probs[k] * lcur;
    }
    return sum;
}

}  // namespace

PhaseSpaceGrid::PhaseSpaceGrid(const PhaseSpaceWindow& window, std::vector<double> values)
    : window_(window), values_(std::move(values)) {
    validate_window(window_);
    const std::size_t expected =
        static_cast<std::size_t>(window_.nx) * static_cast<std::size_t>(window_.np);
    if (values_.size() != expected) {
        throw std::invalid_argument("PhaseSpaceGrid: got " + std::to_string(values_.size()) +
                                    " values for a " + std::to_string(window_.nx) + " x " +
                                    std::to_string(window_.np) + " window");
    }
    for (double v : values_) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("PhaseSpaceGrid: non-finite sample");
        }
    }
}

double PhaseSpaceGrid::x_at(int ix) const {
    if (ix < 0 || ix >= window_.nx) throw std::out_of_range("PhaseSpaceGrid: x index");
    return window_.x_min + dx() * static_cast<double>(ix);
}

double PhaseSpaceGrid::p_at(int ip) const {
    if (ip < 0 || ip >= window_.np) throw std::out_of_range("PhaseSpaceGrid: p index");
    return window_.p_min + dp() * static_cast<double>(ip);
}

double PhaseSpaceGrid::value(int ix, int ip) const {
    if (ix < 0 || ix >= window_.nx || ip < 0 || ip >= window_.np) {
        throw std::out_of_range("PhaseSpaceGrid: sample index");
    }
    return values_[static_cast<std::size_t>(ix) * static_cast<std::size_t>(window_.np) +
                   static_cast<std::size_t>(ip)];
}

double PhaseSpaceGrid::dx() const {
    return (window_.x_max - window_.x_min) / static_cast<double>(window_.nx - 1);
}

double PhaseSpaceGrid::dp() const {
    return (window_.p_max - window_.p_min) / static_cast<double>(window_.np - 1);
}

double wigner_fock(int n, double x, double p) {
    if (n < 0) throw std::invalid_argument("wigner_fock: negative photon number");
    if (!std::isfinite(x) || !std::isfinite(p)) {
        throw std::invalid_argument("wigner_fock: non-finite phase-space point");
    }
    const double r2 = x * x + p * p;
    const double z = 2.0 * r2;
    double laguerre = 1.0;
    if (n >= 1) {
        double lprev = 1.0;
        double lcur = 1.0 - z;
        for (int k = 1; k < n; ++k) {
            const double kd = static_cast<double>(k);
            const double lnext = ((2.0 * kd + 1.0 - z) * lcur - kd * lprev) / (kd + 1.0);
            lprev = lcur;
            lcur = lnext;
        }
        laguerre = lcur;
    }
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    return sign / std::numbers::pi * std::exp(-r2) * laguerre;
}

PhaseSpaceGrid wigner_state(const DiagonalFockState& state, const PhaseSpaceWindow& window) {
    validate_window(window);
    auto [normalized, norm] = normalize(state);
    (void)norm;
    const std::vector<double>& probs = normalized.probs();

    std::vector<double> values(static_cast<std::size_t>(window.nx) *
                               static_cast<std::size_t>(window.np));
    const double step_x = (window.x_max - window.x_min) / static_cast<double>(window.nx - 1);
    const double step_p = (window.p_max - window.p_min) / static_cast<double>(window.np - 1);
    std::size_t at = 0;
    for (int ix = 0; ix < window.nx; ++ix) {
        const double x = window.x_min + step_x * static_cast<double>(ix);
        for (int ip = 0; ip < window.np; ++ip) {
            const double p = window.p_min + step_p * static_cast<double>(ip);
            const double r2 = x * x + p * p;
            values[at++] = std::exp(-r2) / std::numbers::pi * mixture_series(probs, 2.0 * r2);
        }
    }
    return PhaseSpaceGrid(window, std::move(values));
}

NegativityReport negativity(const PhaseSpaceGrid& grid) {
    const PhaseSpaceWindow& w = grid.window();
    const double cell = grid.dx() * grid.dp();

    double min_value = grid.value(0, 0);
    double integral = 0.0;
    double negative_volume = 0.0;
    for (int ix = 0; ix < w.nx; ++ix) {
        const double wx = (ix == 0 || ix == w.nx - 1) ? 0.5 : 1.0;
        for (int ip = 0; ip < w.np; ++ip) {
            const double wp = (ip == 0 || ip == w.np - 1) ? 0.5 : 1.0;
            const double v = grid.value(ix, ip);
            if (v < min_value) min_value = v;
            integral += wx * wp * v;
            if (v < 0.0) negative_volume += wx * wp * (-v);
        }
    }
    integral *= cell;
    negative_volume *= cell;

    if (std::abs(integral - 1.0) > 0.05) {
        throw std::runtime_error(
            "negativity: grid integral " + std::to_string(integral) +
            " is too far from 1; widen the window or refine the sampling");
    }
    return NegativityReport{min_value, integral, negative_volume};
}

}  // namespace fockloop
