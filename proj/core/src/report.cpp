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

#include "fockloop/report.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace fockloop {

namespace {

using ordered_json = nlohmann::ordered_json;

const char* objective_name(OptimizeObjective objective) {
    switch (objective) {
        case OptimizeObjective::kFidelity:
            return "fidelity";
        case OptimizeObjective::kProbability:
            return "probability";
        case OptimizeObjective::kProduct:
            return "product";
    }
    throw std::invalid_argument("objective_name: unknown objective");
}

// NaN has no JSON representation; nlohmann would emit the null literal
// anyway, this just makes the choice explicit at the call sites.
ordered_json json_number(double value) {
    if (std::isnan(value)) return nullptr;
    return value;
}

}  // namespace

std::string format_double(double value) {
    std::array<char, 64> buffer{};
    const auto out = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value,
                                   std::chars_format::general, 17);
    return std::string(buffer.data(), out.ptr);
}

std::string run_summary_to_json(const IterationConfig& config, const RunSummary& summary) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["n_pulses"] = config.n_pulses;
    doc["tau"] = config.tau.value();
    doc["eta"] = config.eta.value();
    doc["engine"] = config.engine == StepEngine::kAnalytic ? "analytic" : "oracle";
    doc["p_net"] = summary.p_net.value();
    doc["fidelity"] = summary.fidelity.value();
    doc["purity"] = summary.purity.value();
    ordered_json steps = ordered_json::array();
    for (const StepResult& step : summary.steps) {
        steps.push_back({{"index", step.index}, {"p_conditional", step.p_conditional.value()}});
    }
    doc["steps"] = std::move(steps);
    doc["final_state"] = summary.final_state.probs();
    return doc.dump(2) + "\n";
}

std::string sweep_to_csv(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
    std::string out = "tau,eta";
    if (spec.metrics.probability) out += ",p_net";
    if (spec.metrics.fidelity) out += ",fidelity";
    if (spec.metrics.purity) out += ",purity";
    out += '\n';
    for (const SweepRow& row : rows) {
        out += format_double(row.tau);
        out += ',';
        out += format_double(row.eta);
        if (spec.metrics.probability) {
            out += ',';
            out += format_double(row.p_net);
        }
        if (spec.metrics.fidelity) {
            out += ',';
            out += format_double(row.fidelity);
        }
        if (spec.metrics.purity) {
            out += ',';
            out += format_double(row.purity);
        }
        out += '\n';
    }
    return out;
}

std::string sweep_to_json(const SweepSpec& spec, const std::vector<SweepRow>& rows) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["n_pulses"] = spec.n_pulses;
    doc["tau_grid"] = {{"start", spec.tau_grid.start},
                       {"stop", spec.tau_grid.stop},
                       {"count", spec.tau_grid.count}};
    doc["eta_grid"] = {{"start", spec.eta_grid.start},
                       {"stop", spec.eta_grid.stop},
                       {"count", spec.eta_grid.count}};
    ordered_json out_rows = ordered_json::array();
    for (const SweepRow& row : rows) {
        ordered_json r;
        r["tau"] = row.tau;
        r["eta"] = row.eta;
        if (spec.metrics.probability) r["p_net"] = row.p_net;
        if (spec.metrics.fidelity) r["fidelity"] = json_number(row.fidelity);
        if (spec.metrics.purity) r["purity"] = json_number(row.purity);
        out_rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(out_rows);
    return doc.dump(2) + "\n";
}

std::string wigner_grid_to_csv(const PhaseSpaceGrid& grid) {
    const PhaseSpaceWindow& w = grid.window();
    std::string out = "x,p,w\n";
    for (int ix = 0; ix < w.nx; ++ix) {
        const std::string x = format_double(grid.x_at(ix));
        for (int ip = 0; ip < w.np; ++ip) {
            out += x;
            out += ',';
            out += format_double(grid.p_at(ip));
            out += ',';
            out += format_double(grid.value(ix, ip));
            out += '\n';
        }
    }
    return out;
}

std::string negativity_to_json(const NegativityReport& report) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["min_value"] = report.min_value;
    doc["integral"] = report.integral;
    doc["negative_volume"] = report.negative_volume;
    return doc.dump(2) + "\n";
}

std::string optimize_result_to_json(const OptimizeSpec& spec, const OptimizeResult& result) {
    ordered_json doc;
    doc["schema"] = 1;
    doc["n_pulses"] = spec.n_pulses;
    doc["eta"] = spec.eta.value();
    doc["objective"] = objective_name(spec.objective);
    doc["tau_resolution"] = spec.tau_resolution;
    doc["degenerate_flat"] = result.degenerate_flat;
    doc["tau_star"] = json_number(result.tau_star);
    doc["objective_value"] = json_number(result.objective_value);
    ordered_json curve = ordered_json::array();
    for (const OptimizePoint& point : result.curve) {
        curve.push_back({{"tau", point.tau}, {"value", point.value}});
    }
    doc["curve"] = std::move(curve);
    return doc.dump(2) + "\n";
}

}  // namespace fockloop
