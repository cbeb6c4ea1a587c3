// SPDX-License-Identifier: Apache-2.0
//
// notchdepth: notch depth simulation and models for diagonally loaded MVDR beamformers
// Copyright (C) 2026 The notchdepth authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <doctest.h>

#include "notchdepth/notchdepth.h"

#include <cmath>
#include <cstring>
#include <string>
#include <thread>

namespace {

ndm_scenario default_scenario() {
    ndm_scenario sc;
    ndm_scenario_default(&sc);
    return sc;
}

} // namespace

TEST_CASE("version and status strings") {
    CHECK(std::string(ndm_version()) == "1.0.0");
    CHECK(std::string(ndm_status_string(NDM_OK)) == "ok");
    for (int s = NDM_OK; s <= NDM_ERR_INTERNAL; ++s)
        CHECK(std::strlen(ndm_status_string(static_cast<ndm_status>(s))) > 0);
    CHECK(std::strlen(ndm_status_string(static_cast<ndm_status>(99))) > 0);
}

TEST_CASE("default scenario") {
    const auto sc = default_scenario();
    CHECK(sc.n_sensors == 50);
    CHECK(sc.look_u == 0.0);
    CHECK(sc.interferer_u == 0.06);
    CHECK(sc.delta == 0.5);
    ndm_angles a;
    REQUIRE(ndm_angles_compute(&sc, &a) == NDM_OK);
    CHECK(a.cos_sq == doctest::Approx(0.045165207712601144).epsilon(1e-12));
}

TEST_CASE("null arguments") {
    const auto sc = default_scenario();
    double x = 0.0;
    CHECK(ndm_angles_compute(nullptr, nullptr) == NDM_ERR_NULL_ARGUMENT);
    CHECK(ndm_ensemble_notch_depth(&sc, 1.0, nullptr) == NDM_ERR_NULL_ARGUMENT);
    CHECK(std::string(ndm_last_error()).size() > 0);
    CHECK(ndm_model_nd_vs_snapshots(nullptr, 1.0, 100.0, &x, nullptr) == NDM_ERR_NULL_ARGUMENT);
    CHECK(ndm_sweep_run(nullptr, nullptr) == NDM_ERR_NULL_ARGUMENT);
    CHECK(ndm_curve_size(nullptr) == 0);
    ndm_curve_free(nullptr);
}

TEST_CASE("closed forms through the C API") {
    const auto sc = default_scenario();
    double nd = 0.0;
    REQUIRE(ndm_ensemble_notch_depth(&sc, 100.0, &nd) == NDM_OK);
    CHECK(nd == doctest::Approx(4.4557128097915385e-09).epsilon(1e-9));

    std::uint32_t warnings = 0xffu;
    REQUIRE(ndm_model_nd_vs_snapshots(&sc, 100.0, 100.0, &nd, &warnings) == NDM_OK);
    CHECK(nd == doctest::Approx(1.8460728158523294e-06).epsilon(1e-10));
    CHECK(warnings == 0u);
    REQUIRE(ndm_model_nd_vs_inr(&sc, 100.0, 100.0, &nd, nullptr) == NDM_OK);
    CHECK(nd == doctest::Approx(1.8432846002639929e-06).epsilon(1e-10));

    double p = 0.0;
    REQUIRE(ndm_rmt_projection_sq(0.5, 50, 100.0, &p) == NDM_OK);
    CHECK(p == doctest::Approx(0.9998999900009999).epsilon(1e-14));

    ndm_breakpoints bp;
    REQUIRE(ndm_breakpoints_compute(&sc, 100.0, 100.0, &bp) == NDM_OK);
    CHECK(bp.l3 == doctest::Approx(46979.859086975885).epsilon(1e-10));
    CHECK(bp.inr2 == doctest::Approx(0.3784127522576216).epsilon(1e-10));
}

TEST_CASE("error mapping") {
    auto sc = default_scenario();
    double nd = 0.0;
    sc.interferer_u = 2.0;
    CHECK(ndm_ensemble_notch_depth(&sc, 1.0, &nd) == NDM_ERR_INVALID_DIRECTION);
    sc = default_scenario();
    sc.n_sensors = 0;
    CHECK(ndm_ensemble_notch_depth(&sc, 1.0, &nd) == NDM_ERR_INVALID_PARAMETER);
    sc = default_scenario();
    sc.interferer_u = sc.look_u;
    CHECK(ndm_model_nd_vs_snapshots(&sc, 100.0, 100.0, &nd, nullptr) == NDM_ERR_DEGENERATE_GEOMETRY);
    CHECK(std::string(ndm_last_error()).find("aligned") != std::string::npos);
    sc = default_scenario();
    sc.delta = 0.0;
    CHECK(ndm_run_trial(&sc, 10, 100.0, 1, NDM_SCM_SNAPSHOTS, &nd) == NDM_ERR_SINGULAR_MATRIX);
}

TEST_CASE("last error is per thread") {
    auto sc = default_scenario();
    sc.interferer_u = 2.0;
    double nd = 0.0;
    REQUIRE(ndm_ensemble_notch_depth(&sc, 1.0, &nd) != NDM_OK);
    const std::string mine = ndm_last_error();
    std::string theirs = "unset";
    std::thread([&] { theirs = ndm_last_error(); }).join();
    CHECK(theirs.empty());
    CHECK(mine == ndm_last_error());
}

TEST_CASE("trials and seeds") {
    std::uint64_t a = 0, b = 0;
    REQUIRE(ndm_trial_seed(42, 1, 2, &a) == NDM_OK);
    REQUIRE(ndm_trial_seed(42, 1, 3, &b) == NDM_OK);
    CHECK(a != b);
    const auto sc = default_scenario();
    double x = 0.0, y = 0.0;
    REQUIRE(ndm_run_trial(&sc, 100, 100.0, a, NDM_SCM_SNAPSHOTS, &x) == NDM_OK);
    REQUIRE(ndm_run_trial(&sc, 100, 100.0, a, NDM_SCM_SNAPSHOTS, &y) == NDM_OK);
    CHECK(x == y);
    CHECK(ndm_run_trial(&sc, 100, 100.0, a, static_cast<ndm_scm_method>(7), &x) == NDM_ERR_INVALID_PARAMETER);
}

TEST_CASE("curve handles") {
    const double grid[] = {25.0, 100.0};
    ndm_sweep_spec spec{};
    spec.scenario = default_scenario();
    spec.axis = NDM_AXIS_SNAPSHOTS;
    spec.axis_values = grid;
    spec.n_axis_values = 2;
    spec.fixed_value = 100.0;
    spec.trials = 5;
    spec.master_seed = 42;
    spec.averaging = NDM_AVERAGE_LINEAR;
    spec.scm_method = NDM_SCM_SNAPSHOTS;
    spec.workers = 1;

    ndm_curve *curve = nullptr;
    REQUIRE(ndm_sweep_run(&spec, &curve) == NDM_OK);
    REQUIRE(curve != nullptr);
    CHECK(ndm_curve_size(curve) == 2);

    ndm_axis axis;
    int trials = 0;
    std::uint64_t seed = 0;
    REQUIRE(ndm_curve_info(curve, &axis, &trials, &seed) == NDM_OK);
    CHECK(axis == NDM_AXIS_SNAPSHOTS);
    CHECK(trials == 5);
    CHECK(seed == 42);

    ndm_curve_point pt;
    REQUIRE(ndm_curve_point_at(curve, 1, &pt) == NDM_OK);
    CHECK(pt.axis_value == 100.0);
    CHECK(pt.model_db == doctest::Approx(-57.3375).epsilon(1e-5));
    CHECK(std::isfinite(pt.mc_mean_db));
    CHECK(ndm_curve_point_at(curve, 2, &pt) == NDM_ERR_OUT_OF_RANGE);
    ndm_curve_free(curve);

    spec.model_only = 1;
    REQUIRE(ndm_sweep_run(&spec, &curve) == NDM_OK);
    REQUIRE(ndm_curve_point_at(curve, 0, &pt) == NDM_OK);
    CHECK(std::isnan(pt.mc_mean_db));
    ndm_curve_free(curve);

    spec.n_axis_values = 0;
    curve = reinterpret_cast<ndm_curve *>(&spec);
    CHECK(ndm_sweep_run(&spec, &curve) == NDM_ERR_INVALID_PARAMETER);
    CHECK(curve == nullptr);

    spec.axis_values = nullptr;
    spec.n_axis_values = 2;
    CHECK(ndm_sweep_run(&spec, &curve) == NDM_ERR_NULL_ARGUMENT);
}

TEST_CASE("RMT validation through the C API") {
    const auto sc = default_scenario();
    ndm_rmt_validation v;
    REQUIRE(ndm_validate_rmt(&sc, 100, 100.0, 20, 7, &v) == NDM_OK);
    CHECK(v.trials == 20);
    CHECK(v.below_transition == 0);
    CHECK(std::abs(v.empirical_mean - v.model) < 1e-3);
    CHECK(ndm_validate_rmt(&sc, 100, 100.0, 0, 7, &v) == NDM_ERR_INVALID_PARAMETER);
}
