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

#ifndef FOCKLOOP_STEP_HPP
#define FOCKLOOP_STEP_HPP

#include <vector>

#include "fockloop/types.hpp"

namespace fockloop {

// Closed forms for one conditional photon addition: |n> in the loop mode and
// one fresh photon meet on the transmittance-tau beam splitter, the detector
// arm passes the efficiency-eta loss splitter, the detector sees vacuum, and
// the loss mode is traced out.

/// Unnormalized diagonal of the post-selected loop state over photon numbers
/// 0..n+1, together with the no-click probability (their sum).
struct StepCoefficients {
    std::vector<double> c;
    Probability p_noclick;
};

/// No-click probability
///   p(n, tau, eta) = (eta^2 tau (1-tau) (n+1) + 1 - eta) * (eta tau + 1 - eta)^(n-1).
/// The n = 0 case (first pulse meets vacuum) is the same expression; at its
/// one removable singularity (eta = 1, tau = 0) the simplified n = 0 form
/// p = 1 - tau*eta is used instead.
Probability step_probability(int n, Transmittance tau, Efficiency eta);

/// Diagonal weights of the post-selected, loss-traced loop state:
///   c[0]   = tau (1-tau)^n (1-eta)^(n+1) (n+1)
///   c[k]   = tau^(k-1) (1-tau)^(n-k) (1-eta)^(n-k+1)
///            * k!(n-k+1)!/n! * [C(n,k) tau - C(n,k-1)(1-tau)]^2,  1 <= k <= n
///   c[n+1] = tau^n (1-tau) (n+1)
/// All entries are nonnegative and sum to p(n, tau, eta).
StepCoefficients step_coefficients(int n, Transmittance tau, Efficiency eta);

/// Fidelity of the post-selected state to |n+1>:
///   F(n, tau, eta) = tau^n (1-tau) (n+1) / p(n, tau, eta).
/// Throws std::domain_error where p vanishes (tau at 0 or 1 with an ideal
/// detector), since no state is ever heralded there.
FidelityValue step_fidelity(int n, Transmittance tau, Efficiency eta);

}  // namespace fockloop

#endif  // FOCKLOOP_STEP_HPP
