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

#include "notchdepth/notchdepth.h"

#include "notchdepth/errors.hpp"
#include "notchdepth/experiments.hpp"

#include <cmath>
#include <exception>
#include <new>
#include <string>

using namespace notchdepth;

struct ndm_curve {
    NotchDepthCurve curve;
};

namespace {

thread_local std::string last_error;

ndm_status to_status(ErrorCode code) {
    switch (code) {
    case ErrorCode::invalid_direction:
        return NDM_ERR_INVALID_DIRECTION;
    case ErrorCode::dimension:
        return NDM_ERR_DIMENSION;
    case ErrorCode::invalid_parameter:
        return NDM_ERR_INVALID_PARAMETER;
    case ErrorCode::singular_matrix:
        return NDM_ERR_SINGULAR_MATRIX;
    case ErrorCode::invalid_input:
        return NDM_ERR_INVALID_INPUT;
    case ErrorCode::degenerate_geometry:
        return NDM_ERR_DEGENERATE_GEOMETRY;
    }
    return NDM_ERR_INTERNAL;
}

ndm_status fail(ndm_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

// Runs fn and converts any exception into a status code plus message.
template <typename Fn> ndm_status guarded(Fn &&fn) {
    try {
        fn();
        return NDM_OK;
    } catch (const Error &e) {
        return fail(to_status(e.code()), e.what());
    } catch (const std::bad_alloc &) {
        return fail(NDM_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(NDM_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(NDM_ERR_INTERNAL, "unknown failure");
    }
}

Scenario to_scenario(const ndm_scenario &s) {
    Scenario out{ArrayGeometry(s.n_sensors, s.spacing_wavelengths == 0.0 ? 0.5 : s.spacing_wavelengths)};
    out.look_u = s.look_u;
    out.interferer_u = s.interferer_u;
    out.delta = s.delta;
    out.validate();
    return out;
}

ScmMethod to_method(ndm_scm_method m) {
    switch (m) {
    case NDM_SCM_SNAPSHOTS:
        return ScmMethod::snapshots;
    case NDM_SCM_WISHART:
        return ScmMethod::wishart;
    case NDM_SCM_AUTOMATIC:
        return ScmMethod::automatic;
    }
    throw Error(ErrorCode::invalid_parameter, "unknown SCM method");
}

#define NDM_REQUIRE(ptr)                                                                           \
    do {                                                                                           \
        if ((ptr) == nullptr)                                                                      \
            return fail(NDM_ERR_NULL_ARGUMENT, #ptr " is null");                                   \
    } while (0)

} // namespace

extern "C" {

const char *ndm_version(void) { return "1.0.0"; }

const char *ndm_status_string(ndm_status status) {
    switch (status) {
    case NDM_OK:
        return "ok";
    case NDM_ERR_NULL_ARGUMENT:
        return "null argument";
    case NDM_ERR_INVALID_DIRECTION:
        return "invalid direction";
    case NDM_ERR_DIMENSION:
        return "dimension mismatch";
    case NDM_ERR_INVALID_PARAMETER:
        return "invalid parameter";
    case NDM_ERR_SINGULAR_MATRIX:
        return "singular matrix";
    case NDM_ERR_INVALID_INPUT:
        return "invalid input";
    case NDM_ERR_DEGENERATE_GEOMETRY:
        return "degenerate geometry";
    case NDM_ERR_OUT_OF_RANGE:
        return "index out of range";
    case NDM_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char *ndm_last_error(void) { return last_error.c_str(); }

void ndm_scenario_default(ndm_scenario *scenario) {
    if (scenario == nullptr)
        return;
    scenario->n_sensors = 50;
    scenario->spacing_wavelengths = 0.5;
    scenario->look_u = 0.0;
    scenario->interferer_u = 0.06;
    scenario->delta = 0.5;
}

ndm_status ndm_angles_compute(const ndm_scenario *scenario, ndm_angles *out) {
    NDM_REQUIRE(scenario);
    NDM_REQUIRE(out);
    return guarded([&] {
        const AngleDecomposition a = to_scenario(*scenario).angles();
        *out = {a.cos_sq, a.sin_sq, a.alpha, a.beta};
    });
}

ndm_status ndm_ensemble_notch_depth(const ndm_scenario *scenario, double inr, double *nd_linear) {
    NDM_REQUIRE(scenario);
    NDM_REQUIRE(nd_linear);
    return guarded([&] {
        const Scenario sc = to_scenario(*scenario);
        *nd_linear = ensemble_notch_depth({sc.geometry.n_sensors(), sc.delta, inr, sc.angles().cos_sq}).linear;
    });
}

ndm_status ndm_model_nd_vs_snapshots(const ndm_scenario *scenario, double inr, double snapshots,
                                     double *nd_linear, uint32_t *warnings) {
    NDM_REQUIRE(scenario);
    NDM_REQUIRE(nd_linear);
    return guarded([&] {
        const Scenario sc = to_scenario(*scenario);
        const auto p = ModelParams::make(sc.geometry.n_sensors(), snapshots, inr, sc.delta, sc.angles());
        const ModelResult r = model_nd_vs_snapshots(p, snapshots);
        *nd_linear = r.value.linear;
        if (warnings != nullptr)
            *warnings = r.warnings;
    });
}

ndm_status ndm_model_nd_vs_inr(const ndm_scenario *scenario, double snapshots, double inr,
                               double *nd_linear, uint32_t *warnings) {
    NDM_REQUIRE(scenario);
    NDM_REQUIRE(nd_linear);
    return guarded([&] {
        const Scenario sc = to_scenario(*scenario);
        const auto p = ModelParams::make(sc.geometry.n_sensors(), snapshots, inr, sc.delta, sc.angles());
        const ModelResult r = model_nd_vs_inr(p, inr);
        *nd_linear = r.value.linear;
        if (warnings != nullptr)
            *warnings = r.warnings;
    });
}

ndm_status ndm_rmt_projection_sq(double aspect, int n_sensors, double inr, double *out) {
    NDM_REQUIRE(out);
    return guarded([&] { *out = rmt_projection_sq(aspect, n_sensors, inr); });
}

ndm_status ndm_breakpoints_compute(const ndm_scenario *scenario, double inr, double snapshots,
                                   ndm_breakpoints *out) {
    NDM_REQUIRE(scenario);
    NDM_REQUIRE(out);
    return guarded([&] {
        const Scenario sc = to_scenario(*scenario);
        const auto p = ModelParams::make(sc.geometry.n_sensors(), snapshots, inr, sc.delta, sc.angles());
        const BreakpointsL l = breakpoints_snapshots(p);
        const BreakpointsINR i = breakpoints_inr(p);
        *out = {l.l1, l.l2, l.l3, i.inr1, i.inr2};
    });
}

ndm_status ndm_trial_seed(uint64_t master_seed, uint64_t axis_index, uint64_t trial_index,
                          uint64_t *out) {
    NDM_REQUIRE(out);
    *out = trial_seed(master_seed, axis_index, trial_index);
    return NDM_OK;
}

ndm_status ndm_run_trial(const ndm_scenario *scenario, size_t snapshots, double inr, uint64_t seed,
                         ndm_scm_method scm_method, double *nd_linear) {
    NDM_REQUIRE(scenario);
    NDM_REQUIRE(nd_linear);
    return guarded([&] {
        const TrialOptions options{to_method(scm_method)};
        *nd_linear = run_trial(to_scenario(*scenario), static_cast<Eigen::Index>(snapshots), inr, seed,
                               options)
                         .linear;
    });
}

ndm_status ndm_sweep_run(const ndm_sweep_spec *spec, ndm_curve **out) {
    NDM_REQUIRE(spec);
    NDM_REQUIRE(out);
    *out = nullptr;
    if (spec->n_axis_values > 0 && spec->axis_values == nullptr)
        return fail(NDM_ERR_NULL_ARGUMENT, "axis_values is null");
    return guarded([&] {
        SweepSpec s;
        s.scenario = to_scenario(spec->scenario);
        if (spec->axis != NDM_AXIS_SNAPSHOTS && spec->axis != NDM_AXIS_INR)
            throw Error(ErrorCode::invalid_parameter, "unknown sweep axis");
        s.axis = spec->axis == NDM_AXIS_SNAPSHOTS ? SweepAxis::snapshots : SweepAxis::inr;
        s.axis_values.assign(spec->axis_values, spec->axis_values + spec->n_axis_values);
        s.fixed_value = spec->fixed_value;
        s.trials = spec->trials;
        s.master_seed = spec->master_seed;
        if (spec->averaging != NDM_AVERAGE_LINEAR && spec->averaging != NDM_AVERAGE_DB)
            throw Error(ErrorCode::invalid_parameter, "unknown averaging mode");
        s.averaging = spec->averaging == NDM_AVERAGE_LINEAR ? Averaging::linear : Averaging::db;
        s.scm = to_method(spec->scm_method);
        s.workers = spec->workers;
        s.model_only = spec->model_only != 0;
        *out = new ndm_curve{run_sweep(s)};
    });
}

size_t ndm_curve_size(const ndm_curve *curve) { return curve == nullptr ? 0 : curve->curve.size(); }

ndm_status ndm_curve_point_at(const ndm_curve *curve, size_t index, ndm_curve_point *out) {
    NDM_REQUIRE(curve);
    NDM_REQUIRE(out);
    const NotchDepthCurve &c = curve->curve;
    if (index >= c.size())
        return fail(NDM_ERR_OUT_OF_RANGE, "curve index " + std::to_string(index) + " out of range");
    *out = {c.axis_values[index], c.mc_mean_db[index], c.mc_stderr_db[index],
            c.model_db[index],    c.ensemble_db[index], c.model_warnings[index]};
    return NDM_OK;
}

ndm_status ndm_curve_info(const ndm_curve *curve, ndm_axis *axis, int *trials, uint64_t *master_seed) {
    NDM_REQUIRE(curve);
    if (axis != nullptr)
        *axis = curve->curve.axis == SweepAxis::snapshots ? NDM_AXIS_SNAPSHOTS : NDM_AXIS_INR;
    if (trials != nullptr)
        *trials = curve->curve.trials;
    if (master_seed != nullptr)
        *master_seed = curve->curve.master_seed;
    return NDM_OK;
}

void ndm_curve_free(ndm_curve *curve) { delete curve; }

ndm_status ndm_validate_rmt(const ndm_scenario *scenario, size_t snapshots, double inr, int trials,
                            uint64_t master_seed, ndm_rmt_validation *out) {
    NDM_REQUIRE(scenario);
    NDM_REQUIRE(out);
    return guarded([&] {
        const RmtValidation v = validate_rmt_projection(to_scenario(*scenario),
                                                        static_cast<Eigen::Index>(snapshots), inr,
                                                        trials, master_seed);
        *out = {v.empirical_mean, v.model, v.empirical_perp_mean, v.model_perp,
                v.below_transition ? 1 : 0, v.trials};
    });
}

} // extern "C"
