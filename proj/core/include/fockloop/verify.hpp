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

#ifndef FOCKLOOP_VERIFY_HPP
#define FOCKLOOP_VERIFY_HPP

#include <string>
#include <vector>

namespace fockloop {

/// Closed-form vs brute-force equivalence sweep. Single steps are compared
/// for n = 0..max_n on a grid_count^2 (tau, eta) grid over [0.05, 0.95]^2;
/// full runs for n_pulses up to min(max_n, 4) on a fixed 5x5 grid.
struct VerifySpec {
    int max_n = 4;  // at most 6; the brute-force engine is not meant for more
    int grid_count = 9;
    double threshold = 1e-9;
};

struct VerifyDeviation {
    std::string stage;  // "step" or "run"
    int n;
    double tau;
    double eta;
    double deviation;
};

struct VerifyReport {
    double max_step_deviation = 0.0;
    double max_run_deviation = 0.0;
    double threshold = 0.0;
    std::vector<VerifyDeviation> failures;

    double max_deviation() const;
    bool passed() const { return failures.empty(); }
};

VerifyReport verify_equivalence(const VerifySpec& spec);

std::string verify_report_to_text(const VerifySpec& spec, const VerifyReport& report);

}  // namespace fockloop

#endif  // FOCKLOOP_VERIFY_HPP
