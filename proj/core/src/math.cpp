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

#include "fockloop/math.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fockloop {

double log_factorial(int n) {
    if (n < 0) {
        throw std::invalid_argument("log_factorial: negative argument " + std::to_string(n));
    }
    if (n <= 1) return 0.0;
    return std::lgamma(static_cast<double>(n) + 1.0);
}

// Largest n for which the running products below stay inside unsigned
// 128-bit range with exact division at every step.
namespace {
constexpr int kExactBinomialLimit = 62;
}

double binomial(int n, int k) {
    if (n < 0 || k < 0) {
        throw std::invalid_argument("binomial: negative argument");
    }
    if (k > n) {
        throw std::invalid_argument("binomial: k = " + std::to_string(k) + " exceeds n = " +
                                    std::to_string(n));
    }
    if (k > n - k) k = n - k;
    if (n <= kExactBinomialLimit) {
        // Prefix products are binomial coefficients themselves, so every
        // division below is exact.
        unsigned __int128 r = 1;
        for (int i = 1; i <= k; ++i) {
            r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        }
        return static_cast<double>(r);
    }
    return std::exp(log_factorial(n) - log_factorial(k) - log_factorial(n - k));
}

}  // namespace fockloop
