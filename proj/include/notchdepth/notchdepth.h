/*
 * SPDX-License-Identifier: Apache-2.0
 *
 * notchdepth: notch depth simulation and models for diagonally loaded MVDR beamformers
 * Copyright (C) 2026 The notchdepth authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the notchdepth library.
 *
 * Every function returns an ndm_status. On failure, ndm_last_error() returns a
 * message for the most recent failure on the calling thread; the message
 * stays valid until the next failing call on that thread. Curves are opaque
 * handles owned by the caller and released with ndm_curve_free().
 *
 * Directions are direction cosines. INR is linear (sigma_1^2) throughout.
 */

#ifndef NOTCHDEPTH_H
#define NOTCHDEPTH_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(NDM_BUILDING_LIBRARY)
#    define NDM_API __declspec(dllexport)
#  else
#    define NDM_API __declspec(dllimport)
#  endif
#else
#  define NDM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ndm_status {
    NDM_OK = 0,
    NDM_ERR_NULL_ARGUMENT = 1,
    NDM_ERR_INVALID_DIRECTION = 2,
    NDM_ERR_DIMENSION = 3,
    NDM_ERR_INVALID_PARAMETER = 4,
    NDM_ERR_SINGULAR_MATRIX = 5,
    NDM_ERR_INVALID_INPUT = 6,
    NDM_ERR_DEGENERATE_GEOMETRY = 7,
    NDM_ERR_OUT_OF_RANGE = 8,
    NDM_ERR_INTERNAL = 9
} ndm_status;

typedef enum ndm_axis { NDM_AXIS_SNAPSHOTS = 0, NDM_AXIS_INR = 1 } ndm_axis;
typedef enum ndm_averaging { NDM_AVERAGE_LINEAR = 0, NDM_AVERAGE_DB = 1 } ndm_averaging;
typedef enum ndm_scm_method {
    NDM_SCM_SNAPSHOTS = 0,
    NDM_SCM_WISHART = 1,
    NDM_SCM_AUTOMATIC = 2
} ndm_scm_method;

/* Model validity warning bits. */
#define NDM_WARN_SHORT_ARRAY 0x1u
#define NDM_WARN_WEAK_INTERFERER 0x2u
#define NDM_WARN_MAINLOBE 0x4u
#define NDM_WARN_LOW_LOADING 0x8u

typedef struct ndm_scenario {
    int n_sensors;
    double spacing_wavelengths; /* 0 selects half wavelength */
    double look_u;
    double interferer_u;
    double delta;
} ndm_scenario;

typedef struct ndm_angles {
    double cos_sq;
    double sin_sq;
    double alpha;
    double beta;
} ndm_angles;

typedef struct ndm_breakpoints {
    double l1;
    double l2;
    double l3;
    double inr1;
    double inr2;
} ndm_breakpoints;

typedef struct ndm_sweep_spec {
    ndm_scenario scenario;
    ndm_axis axis;
    const double *axis_values;
    size_t n_axis_values;
    double fixed_value; /* linear INR for snapshot sweeps, L for INR sweeps */
    int trials;
    uint64_t master_seed;
    ndm_averaging averaging;
    ndm_scm_method scm_method;
    int workers;
    int model_only;
} ndm_sweep_spec;

typedef struct ndm_curve_point {
    double axis_value;
    double mc_mean_db; /* NaN when the curve is model-only */
    double mc_stderr_db;
    double model_db;
    double ensemble_db;
    uint32_t model_warnings;
} ndm_curve_point;

typedef struct ndm_rmt_validation {
    double empirical_mean;
    double model;
    double empirical_perp_mean;
    double model_perp;
    int below_transition;
    int trials;
} ndm_rmt_validation;

typedef struct ndm_curve ndm_curve;

NDM_API const char *ndm_version(void);
NDM_API const char *ndm_status_string(ndm_status status);
NDM_API const char *ndm_last_error(void);

/* Fills a scenario with N = 50, half-wavelength spacing, u0 = 0, u1 = 0.06,
 * delta = 0.5. */
NDM_API void ndm_scenario_default(ndm_scenario *scenario);

NDM_API ndm_status ndm_angles_compute(const ndm_scenario *scenario, ndm_angles *out);
NDM_API ndm_status ndm_ensemble_notch_depth(const ndm_scenario *scenario, double inr,
                                            double *nd_linear);
NDM_API ndm_status ndm_model_nd_vs_snapshots(const ndm_scenario *scenario, double inr,
                                             double snapshots, double *nd_linear,
                                             uint32_t *warnings);
NDM_API ndm_status ndm_model_nd_vs_inr(const ndm_scenario *scenario, double snapshots,
                                       double inr, double *nd_linear, uint32_t *warnings);
NDM_API ndm_status ndm_rmt_projection_sq(double aspect, int n_sensors, double inr,
                                         double *out);
NDM_API ndm_status ndm_breakpoints_compute(const ndm_scenario *scenario, double inr,
                                           double snapshots, ndm_breakpoints *out);

NDM_API ndm_status ndm_trial_seed(uint64_t master_seed, uint64_t axis_index,
                                  uint64_t trial_index, uint64_t *out);
NDM_API ndm_status ndm_run_trial(const ndm_scenario *scenario, size_t snapshots, double inr,
                                 uint64_t seed, ndm_scm_method scm_method, double *nd_linear);

NDM_API ndm_status ndm_sweep_run(const ndm_sweep_spec *spec, ndm_curve **out);
NDM_API size_t ndm_curve_size(const ndm_curve *curve);
NDM_API ndm_status ndm_curve_point_at(const ndm_curve *curve, size_t index,
                                      ndm_curve_point *out);
NDM_API ndm_status ndm_curve_info(const ndm_curve *curve, ndm_axis *axis, int *trials,
                                  uint64_t *master_seed);
NDM_API void ndm_curve_free(ndm_curve *curve);

NDM_API ndm_status ndm_validate_rmt(const ndm_scenario *scenario, size_t snapshots, double inr,
                                    int trials, uint64_t master_seed, ndm_rmt_validation *out);

#ifdef __cplusplus
}
#endif

#endif /* NOTCHDEPTH_H */
