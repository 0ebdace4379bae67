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

#ifndef FOCKLOOP_TYPES_HPP
#define FOCKLOOP_TYPES_HPP

#include <cmath>
#include <stdexcept>
#include <string>

namespace fockloop {

// Allowed overshoot outside [0, 1] before a probability-like value is
// rejected instead of clamped. Cancellation in squared-bracket terms can
// leave results a few ulp outside the unit interval.
inline constexpr double kUnitSlack = 1e-12;

namespace detail {

inline double checked_unit(double value, const char* what) {
    if (std::isnan(value)) {
        throw std::domain_error(std::string(what) + " is NaN");
    }
    if (value < -kUnitSlack || value > 1.0 + kUnitSlack) {
        throw std::domain_error(std::string(what) + " outside [0,1]: " +
                                std::to_string(value));
    }
    if (value < 0.0) return 0.0;
    if (value > 1.0) return 1.0;
    return value;
}

inline double checked_fraction(double value, const char* what) {
    if (!(value >= 0.0 && value <= 1.0)) {  // also rejects NaN
        throw std::invalid_argument(std::string(what) + " must lie in [0,1], got " +
                                    std::to_string(value));
    }
    return value;
}

}  // namespace detail

/// Beam splitter transmittance, the transmitted intensity fraction.
class Transmittance {
   public:
    explicit Transmittance(double tau) : tau_(detail::checked_fraction(tau, "transmittance")) {}
    double value() const { return tau_; }

   private:
    double tau_;
};

/// Single-photon efficiency of the threshold detector.
class Efficiency {
   public:
    explicit Efficiency(double eta) : eta_(detail::checked_fraction(eta, "efficiency")) {}
    double value() const { return eta_; }

   private:
    double eta_;
};

/// A value confined to [0,1]. Inputs within kUnitSlack of the interval are
/// clamped; anything further out is a hard error.
template <class Tag>
class UnitValue {
   public:
    UnitValue() : value_(0.0) {}
    explicit UnitValue(double value) : value_(detail::checked_unit(value, Tag::kName)) {}
    double value() const { return value_; }

   private:
    double value_;
};

struct ProbabilityTag {
    static constexpr const char* kName = "probability";
};
struct FidelityTag {
    static constexpr const char* kName = "fidelity";
};
struct PurityTag {
    static constexpr const char* kName = "purity";
};

using Probability = UnitValue<ProbabilityTag>;
using FidelityValue = UnitValue<FidelityTag>;
using PurityValue = UnitValue<PurityTag>;

}  // namespace fockloop

#endif  // FOCKLOOP_TYPES_HPP
