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

#include "fockloop/wigner.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "fockloop/loop.hpp"

using fockloop::DiagonalFockState;
using fockloop::negativity;
using fockloop::NegativityReport;
using fockloop::PhaseSpaceGrid;
using fockloop::PhaseSpaceWindow;
using fockloop::wigner_fock;
using fockloop::wigner_state;

namespace {

constexpr double kPi = std::numbers::pi;

// Trapezoidal integral of f(x, p) * W over the grid.
template <class F>
double grid_integral(const PhaseSpaceGrid& grid, F&& f) {
    const PhaseSpaceWindow& w = grid.window();
    double total = 0.0;
    for (int ix = 0; ix < w.nx; ++ix) {
        const double wx = (ix == 0 || ix == w.nx - 1) ? 0.5 : 1.0;
        for (int ip = 0; ip < w.np; ++ip) {
            const double wp = (ip == 0 || ip == w.np - 1) ? 0.5 : 1.0;
            total += wx * wp * f(grid.x_at(ix), grid.p_at(ip)) * grid.value(ix, ip);
        }
    }
    return total * grid.dx() * grid.dp();
}

}  // namespace

TEST_CASE("values at the origin alternate as (-1)^n / pi", "[wigner]") {
    CHECK_THAT(wigner_fock(0, 0.0, 0.0), Catch::Matchers::WithinAbs(1.0 / kPi, 1e-15));
    CHECK_THAT(wigner_fock(1, 0.0, 0.0), Catch::Matchers::WithinAbs(-1.0 / kPi, 1e-15));
    CHECK_THAT(wigner_fock(2, 0.0, 0.0), Catch::Matchers::WithinAbs(1.0 / kPi, 1e-15));
    CHECK_THAT(wigner_fock(3, 0.0, 0.0), Catch::Matchers::WithinAbs(-1.0 / kPi, 1e-15));
}

TEST_CASE("single photon crosses zero at r^2 = 1/2", "[wigner]") {
    CHECK_THAT(wigner_fock(1, std::sqrt(0.5), 0.0), Catch::Matchers::WithinAbs(0.0, 1e-15));
    CHECK(wigner_fock(1, 0.3, 0.0) < 0.0);
    CHECK(wigner_fock(1, 1.0, 0.0) > 0.0);
}

TEST_CASE("inputs are validated", "[wigner]") {
    CHECK_THROWS_AS(wigner_fock(-1, 0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(wigner_fock(0, std::nan(""), 0.0), std::invalid_argument);

    PhaseSpaceWindow bad;
    bad.nx = 1;
    CHECK_THROWS_AS(wigner_state(DiagonalFockState::vacuum(), bad), std::invalid_argument);

    PhaseSpaceWindow w;
    w.nx = 3;
    w.np = 3;
    CHECK_THROWS_AS(PhaseSpaceGrid(w, std::vector<double>(8, 0.0)), std::invalid_argument);
    CHECK_THROWS_AS(PhaseSpaceGrid(w, std::vector<double>(9, std::nan(""))),
                    std::invalid_argument);
}

TEST_CASE("vacuum grid: unit mass and variance 1/2", "[wigner]") {
    const PhaseSpaceGrid grid = wigner_state(DiagonalFockState::vacuum());

    const double mass = grid_integral(grid, [](double, double) { return 1.0; });
    CHECK_THAT(mass, Catch::Matchers::WithinAbs(1.0, 1e-6));

    const double var_x = grid_integral(grid, [](double x, double) { return x * x; });
    CHECK_THAT(var_x, Catch::Matchers::WithinAbs(0.5, 1e-3));

    const NegativityReport report = negativity(grid);
    CHECK(report.min_value >= 0.0);
    CHECK_THAT(report.integral, Catch::Matchers::WithinAbs(1.0, 1e-6));
    CHECK(report.negative_volume == 0.0);
}

TEST_CASE("number states integrate to one with negative craters", "[wigner]") {
    for (int n : {1, 2, 3}) {
        const PhaseSpaceGrid grid = wigner_state(DiagonalFockState::fock(n));
        const NegativityReport report = negativity(grid);
        CHECK_THAT(report.integral, Catch::Matchers::WithinAbs(1.0, 0.02));
        CHECK(report.min_value < 0.0);
        CHECK(report.negative_volume > 0.0);
    }
}

TEST_CASE("mixtures are pointwise convex combinations", "[wigner]") {
    PhaseSpaceWindow w;
    w.nx = 21;
    w.np = 21;
    const PhaseSpaceGrid mixed = wigner_state(DiagonalFockState({0.5, 0.5}), w);
    const PhaseSpaceGrid zero = wigner_state(DiagonalFockState::vacuum(), w);
    const PhaseSpaceGrid one = wigner_state(DiagonalFockState::fock(1), w);
    for (int ix = 0; ix < w.nx; ++ix) {
        for (int ip = 0; ip < w.np; ++ip) {
            CHECK_THAT(mixed.value(ix, ip),
                       Catch::Matchers::WithinAbs(
                           0.5 * zero.value(ix, ip) + 0.5 * one.value(ix, ip), 1e-15));
        }
    }
}

TEST_CASE("ideal three-pulse output is the pure |3> surface", "[wigner]") {
    const DiagonalFockState state =
        fockloop::run({3, fockloop::Transmittance(0.5), fockloop::Efficiency(1.0)}).final_state;
    PhaseSpaceWindow w;
    w.nx = 41;
    w.np = 41;
    const PhaseSpaceGrid grid = wigner_state(state, w);
    for (int ix = 0; ix < w.nx; ++ix) {
        for (int ip = 0; ip < w.np; ++ip) {
            CHECK_THAT(grid.value(ix, ip),
                       Catch::Matchers::WithinAbs(wigner_fock(3, grid.x_at(ix), grid.p_at(ip)),
                                                  1e-14));
        }
    }
}

TEST_CASE("lossy three-pulse output keeps a negative minimum", "[wigner]") {
    const DiagonalFockState state =
        fockloop::run({3, fockloop::Transmittance(0.5), fockloop::Efficiency(0.8)}).final_state;
    const PhaseSpaceGrid grid = wigner_state(state);
    const NegativityReport report = negativity(grid);

    CHECK(report.min_value < 0.0);
    CHECK_THAT(report.integral, Catch::Matchers::WithinAbs(1.0, 0.02));
    // W(0, 0) = sum_k p_k (-1)^k / pi, which this mixture makes -1/(2 pi).
    CHECK_THAT(report.min_value, Catch::Matchers::WithinAbs(-0.5 / kPi, 1e-12));
}

TEST_CASE("a window that clips the state is rejected", "[wigner]") {
    PhaseSpaceWindow tiny;
    tiny.x_min = 0.0;
    tiny.x_max = 0.5;
    tiny.p_min = 0.0;
    tiny.p_max = 0.5;
    tiny.nx = 11;
    tiny.np = 11;
    const PhaseSpaceGrid grid = wigner_state(DiagonalFockState::fock(2), tiny);
    CHECK_THROWS_AS(negativity(grid), std::runtime_error);
}

TEST_CASE("grid accessors and layout", "[wigner]") {
    PhaseSpaceWindow w;
    w.x_min = -1.0;
    w.x_max = 1.0;
    w.p_min = -2.0;
    w.p_max = 2.0;
    w.nx = 5;
    w.np = 9;
    const PhaseSpaceGrid grid = wigner_state(DiagonalFockState::vacuum(), w);

    CHECK(grid.x_at(0) == -1.0);
    CHECK(grid.x_at(4) == 1.0);
    CHECK_THAT(grid.dx(), Catch::Matchers::WithinAbs(0.5, 1e-15));
    CHECK_THAT(grid.dp(), Catch::Matchers::WithinAbs(0.5, 1e-15));
    CHECK_THROWS_AS(grid.x_at(5), std::out_of_range);
    CHECK_THROWS_AS(grid.value(0, 9), std::out_of_range);

    // x-major: values()[ix * np + ip]
    CHECK(grid.values()[2 * 9 + 3] == grid.value(2, 3));
}
