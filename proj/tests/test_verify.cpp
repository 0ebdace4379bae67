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

#include "fockloop/verify.hpp"

#include <stdexcept>

#include <catch2/catch_amalgamated.hpp>

using fockloop::VerifyDeviation;
using fockloop::VerifyReport;
using fockloop::VerifySpec;

TEST_CASE("closed forms agree with the oracle on a small sweep", "[verify]") {
    VerifySpec spec;
    spec.max_n = 2;
    spec.grid_count = 5;
    const VerifyReport report = fockloop::verify_equivalence(spec);

    CHECK(report.passed());
    CHECK(report.max_step_deviation < 1e-12);
    CHECK(report.max_run_deviation < 1e-12);
    CHECK(report.max_deviation() ==
          std::max(report.max_step_deviation, report.max_run_deviation));

    const std::string text = fockloop::verify_report_to_text(spec, report);
    CHECK(text.find("PASS") != std::string::npos);
    CHECK(text.find("FAIL") == std::string::npos);
}

TEST_CASE("verification bounds are enforced", "[verify]") {
    VerifySpec spec;
    spec.max_n = 7;
    CHECK_THROWS_AS(fockloop::verify_equivalence(spec), std::invalid_argument);
    spec.max_n = -1;
    CHECK_THROWS_AS(fockloop::verify_equivalence(spec), std::invalid_argument);
    spec.max_n = 2;
    spec.grid_count = 1;
    CHECK_THROWS_AS(fockloop::verify_equivalence(spec), std::invalid_argument);
    spec.grid_count = 3;
    spec.threshold = 0.0;
    CHECK_THROWS_AS(fockloop::verify_equivalence(spec), std::invalid_argument);
}

TEST_CASE("failing reports list the offending points", "[verify]") {
    VerifySpec spec;
    VerifyReport report;
    report.threshold = 1e-9;
    report.max_step_deviation = 3e-4;
    report.failures.push_back(VerifyDeviation{"step", 2, 0.5, 0.8, 3e-4});

    CHECK(!report.passed());
    const std::string text = fockloop::verify_report_to_text(spec, report);
    CHECK(text.find("FAIL (1 offending points)") != std::string::npos);
    CHECK(text.find("step n=2") != std::string::npos);
}
