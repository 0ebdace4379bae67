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

#ifndef FOCKLOOP_REPORT_HPP
#define FOCKLOOP_REPORT_HPP

#include <string>
#include <vector>

#include "fockloop/loop.hpp"
#include "fockloop/sweep.hpp"
#include "fockloop/wigner.hpp"

// Serialization of results to CSV and JSON. CSV numbers are printed with 17
// significant digits through std::to_chars, so output is locale-free and
// byte-deterministic for a fixed spec; JSON goes through nlohmann::json
// (implementation detail, not part of this header) and uses its shortest
// round-trip number form. Every JSON document carries "schema": 1 and
// renders NaN fields as null.

namespace fockloop {

/// Locale-independent general-format rendering with 17 significant digits.
std::string format_double(double value);

std::string run_summary_to_json(const IterationConfig& config, const RunSummary& summary);

/// Header tau,eta,<metrics>, one row per grid point, tau-major, '\n' endings.
std::string sweep_to_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows);

/// The same table as a JSON document with a "rows" array.
std::string sweep_to_json(const SweepSpec& spec, const std::vector<SweepRow>& rows);

/// Header x,p,w, one row per grid sample, x-major.
std::string wigner_grid_to_csv(const PhaseSpaceGrid& grid);

std::string negativity_to_json(const NegativityReport& report);

std::string optimize_result_to_json(const OptimizeSpec& spec, const OptimizeResult& result);

}  // namespace fockloop

#endif  // FOCKLOOP_REPORT_HPP
