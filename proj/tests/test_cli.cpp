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

// Process-level tests of the command line tool. The binary path comes in
// through FOCKLOOP_CLI_PATH at compile time.

#include <sys/wait.h>

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>
#include <json.hpp>

namespace {

struct CommandResult {
    int exit_code;
    std::string output;  // stdout only
};

CommandResult run_cli(const std::string& args) {
    const std::string command = std::string(FOCKLOOP_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer;
    while (fgets(buffer.data(), buffer.size(), pipe) != nullptr) {
        output += buffer.data();
    }
    const int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return CommandResult{WEXITSTATUS(status), output};
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("run prints the reference JSON summary", "[cli]") {
    const CommandResult result = run_cli("run --n 3 --tau 0.5 --eta 1.0");
    REQUIRE(result.exit_code == 0);

    const nlohmann::json doc = nlohmann::json::parse(result.output);
    CHECK(doc.at("schema").get<int>() == 1);
    CHECK_THAT(doc.at("p_net").get<double>(), Catch::Matchers::WithinAbs(0.09375, 1e-12));
    CHECK(doc.at("fidelity").get<double>() == 1.0);
}

TEST_CASE("run with one pulse heralds |1> half the time", "[cli]") {
    const CommandResult result = run_cli("run --n 1 --tau 0.5 --eta 1.0");
    REQUIRE(result.exit_code == 0);

    const nlohmann::json doc = nlohmann::json::parse(result.output);
    CHECK_THAT(doc.at("p_net").get<double>(), Catch::Matchers::WithinAbs(0.5, 1e-12));
    const auto state = doc.at("final_state").get<std::vector<double>>();
    REQUIRE(state.size() == 2);
    CHECK(state[0] == 0.0);
    CHECK(state[1] == 1.0);
}

TEST_CASE("oracle engine agrees with the analytic engine", "[cli]") {
    const CommandResult analytic = run_cli("run --n 3 --tau 0.5 --eta 0.8");
    const CommandResult oracle = run_cli("run --n 3 --tau 0.5 --eta 0.8 --engine oracle");
    REQUIRE(analytic.exit_code == 0);
    REQUIRE(oracle.exit_code == 0);

    const double pa = nlohmann::json::parse(analytic.output).at("p_net").get<double>();
    const double po = nlohmann::json::parse(oracle.output).at("p_net").get<double>();
    CHECK_THAT(po, Catch::Matchers::WithinAbs(pa, 1e-12));
}

TEST_CASE("usage errors exit with 2", "[cli]") {
    CHECK(run_cli("run --tau 0.5 --eta 1.0").exit_code == 2);  // --n missing
    CHECK(run_cli("run --n 3 --tau 1.5 --eta 1.0").exit_code == 2);
    CHECK(run_cli("run --n 0 --tau 0.5 --eta 1.0").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("verify --max-n 99").exit_code == 2);
    CHECK(run_cli("sweep --n 2 --tau-grid nonsense").exit_code == 2);
    CHECK(run_cli("sweep --n 2 --metrics profit").exit_code == 2);
}

TEST_CASE("sweep output is byte-deterministic", "[cli]") {
    const std::string args = "sweep --n 3 --tau-grid 0:1:9 --eta-grid 0:1:9";
    const CommandResult first = run_cli(args);
    const CommandResult second = run_cli(args);
    REQUIRE(first.exit_code == 0);
    REQUIRE(second.exit_code == 0);
    CHECK(first.output == second.output);
    CHECK(first.output.rfind("tau,eta,p_net,fidelity,purity\n", 0) == 0);

    std::size_t lines = 0;
    for (char ch : first.output) lines += ch == '\n' ? 1 : 0;
    CHECK(lines == 9 * 9 + 1);
}

TEST_CASE("sweep emits JSON on request", "[cli]") {
    const CommandResult result =
        run_cli("sweep --n 2 --tau-grid 0.2:0.8:3 --eta-grid 0.5:1:2 --format json");
    REQUIRE(result.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(result.output);
    CHECK(doc.at("schema").get<int>() == 1);
    CHECK(doc.at("rows").size() == 6);
}

TEST_CASE("unwritable output paths exit with 1", "[cli]") {
    const CommandResult result =
        run_cli("sweep --n 1 --tau-grid 0:1:3 --eta-grid 0:1:3 --out /nonexistent/dir/out.csv");
    CHECK(result.exit_code == 1);
}

TEST_CASE("wigner writes a grid and a negativity sidecar", "[cli]") {
    const std::filesystem::path csv_path = temp_path("fockloop_test_wigner.csv");
    const std::filesystem::path sidecar_path = csv_path.string() + ".json";
    std::filesystem::remove(csv_path);
    std::filesystem::remove(sidecar_path);

    const CommandResult result =
        run_cli("wigner --n 3 --tau 0.5 --eta 0.8 --x-grid -5:5:41 --p-grid -5:5:41 --out " +
                csv_path.string());
    REQUIRE(result.exit_code == 0);

    const std::string csv = read_file(csv_path);
    CHECK(csv.rfind("x,p,w\n", 0) == 0);

    const nlohmann::json sidecar = nlohmann::json::parse(read_file(sidecar_path));
    CHECK(sidecar.at("schema").get<int>() == 1);
    CHECK(sidecar.at("min_value").get<double>() < 0.0);
    CHECK_THAT(sidecar.at("integral").get<double>(), Catch::Matchers::WithinAbs(1.0, 0.05));

    std::filesystem::remove(csv_path);
    std::filesystem::remove(sidecar_path);
}

TEST_CASE("wigner with no pulses exports the vacuum", "[cli]") {
    const std::filesystem::path csv_path = temp_path("fockloop_test_vacuum.csv");
    const std::filesystem::path sidecar_path = csv_path.string() + ".json";

    const CommandResult result = run_cli(
        "wigner --n 0 --tau 0.5 --eta 1.0 --x-grid -4:4:33 --p-grid -4:4:33 --out " +
        csv_path.string());
    REQUIRE(result.exit_code == 0);

    // every sampled value nonnegative
    std::istringstream csv(read_file(csv_path));
    std::string line;
    std::getline(csv, line);  // header
    while (std::getline(csv, line)) {
        const std::size_t last_comma = line.rfind(',');
        REQUIRE(last_comma != std::string::npos);
        CHECK(std::strtod(line.c_str() + last_comma + 1, nullptr) >= 0.0);
    }

    const nlohmann::json sidecar = nlohmann::json::parse(read_file(sidecar_path));
    CHECK(sidecar.at("min_value").get<double>() >= 0.0);

    std::filesystem::remove(csv_path);
    std::filesystem::remove(sidecar_path);
}

TEST_CASE("optimize reports the degenerate flat case", "[cli]") {
    const CommandResult result =
        run_cli("optimize --n 3 --eta 1.0 --objective fidelity --tau-resolution 0.01");
    REQUIRE(result.exit_code == 0);
    const nlohmann::json doc = nlohmann::json::parse(result.output);
    CHECK(doc.at("degenerate_flat").get<bool>());
    CHECK(doc.at("tau_star").is_null());
}

TEST_CASE("verify passes and reports", "[cli]") {
    const CommandResult result = run_cli("verify --max-n 2 --grid 3");
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("PASS") != std::string::npos);
}
