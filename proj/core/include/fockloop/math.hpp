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

#ifndef FOCKLOOP_MATH_HPP
#define FOCKLOOP_MATH_HPP

namespace fockloop {

/// ln(n!). Exact zero for n <= 1.
double log_factorial(int n);

/// C(n, k) as a double. Exact integer arithmetic up to n = 62, log-space
/// beyond that. Throws std::invalid_argument for k > n or negative input.
double binomial(int n, int k);

}  // namespace fockloop

#endif  // FOCKLOOP_MATH_HPP
