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

#include "fockloop/step.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "fockloop/math.hpp"

namespace fockloop {

namespace {

void require_photon_count(int n, const char* where) {
    if (n < 0) {
        throw std::invalid_argument(std::string(where) + ": negative photon number " +
                                    std::to_string(n));
    }
}

// k!(n-k+1)!/n! evaluated as a short product of small factors. Exact for the
// empty cases (k = 0, 1) and within a few ulp otherwise.
double middle_weight_factor(int n, int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    for (int j = n - k + 2; j <= n; ++j) f /= j;
    return f;
}

}  // namespace

Probability step_probability(int n, Transmittance tau, Efficiency eta) {
    require_photon_count(n, "step_probability");
    const double t = tau.value();
    const double e = eta.value();
    const double base = e * t + 1.0 - e;
    if (n == 0 && base == 0.0) {
        // Removable 0/0 at eta = 1, tau = 0: everything reflects into the
        // loop and the detector stays silent with certainty.
        return Probability(1.0 - t * e);
    }
    const double head = e * e * t * (1.0 - t) * (n + 1) + 1.0 - e;
    return Probability(head * std::pow(base, n - 1));
}

StepCoefficients step_coefficients(int n, Transmittance tau, Efficiency eta) {
    require_photon_count(n, "step_coefficients");
    const double t = tau.value();
    const double e = eta.value();
    const double r = 1.0 - t;  // reflectance
    const double loss = 1.0 - e;

    std::vector<double> c(static_cast<std::size_t>(n) + 2, 0.0);
    c[0] = t * std::pow(r, n) * std::pow(loss, n + 1) * (n + 1);
    for (int k = 1; k <= n; ++k) {
        const double bracket = binomial(n, k) * t - binomial(n, k - 1) * r;
        c[static_cast<std::size_t>(k)] = std::pow(t, k - 1) * std::pow(r, n - k) *
                                         std::pow(loss, n - k + 1) * middle_weight_factor(n, k) *
                                         bracket * bracket;
    }
    c[static_cast<std::size_t>(n) + 1] = std::pow(t, n) * r * (n + 1);

    double total = 0.0;
    for (double w : c) total += w;
    return StepCoefficients{std::move(c), Probability(total)};
}

FidelityValue step_fidelity(int n, Transmittance tau, Efficiency eta) {
    require_photon_count(n, "step_fidelity");
    const double p = step_probability(n, tau, eta).value();
    if (p <= 0.0) {
        throw std::domain_error("step_fidelity: no-click probability vanishes at tau = " +
                                std::to_string(tau.value()) + ", eta = " +
                                std::to_string(eta.value()) + "; fidelity undefined");
    }
    const double top = std::pow(tau.value(), n) * (1.0 - tau.value()) * (n + 1);
    return FidelityValue(top / p);
}

}  // namespace fockloop
