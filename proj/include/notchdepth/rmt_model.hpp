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

#pragma once

// Random-matrix-theory predictions for the mean notch depth of a diagonally
// loaded MVDR beamformer facing a single interferer.
//
// Both models are closed forms in the generalized angle between look and
// interferer steering vectors. They are approximations valid for long arrays
// (N >> 1), strong interferers (N inr >> 1) and interferers outside the
// conventional main lobe (inr tan^2 >> 1); outside that region the models
// still evaluate but report a validity warning.

#include "notchdepth/array_model.hpp"
#include "notchdepth/beamformer.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace notchdepth {

struct ModelParams {
    int n_sensors = 0;
    double snapshots = 0.0; // L, used by the INR model through c = N/L
    double inr = 0.0;       // linear sigma_1^2, used by the snapshot model
    double delta = 0.0;
    double cos_sq = 0.0;
    double sin_sq = 0.0;
    double tan_sq = 0.0;
    double cot_sq = 0.0;

    double aspect() const { return static_cast<double>(n_sensors) / snapshots; }

    /// Throws ErrorCode::degenerate_geometry when cos^2 is 0 or 1 (to 1e-12).
    static ModelParams make(int n_sensors, double snapshots, double inr, double delta,
                            const AngleDecomposition &angles);
};

enum ValidityWarning : std::uint32_t {
    warn_none = 0,
    warn_short_array = 1u << 0,     // N < 10
    warn_weak_interferer = 1u << 1, // N inr < 10
    warn_mainlobe = 1u << 2,        // inr tan^2 < 10
    warn_low_loading = 1u << 3,     // c <= 1 and delta <= (1 - sqrt(c))^2
};

std::vector<std::string> describe_warnings(std::uint32_t flags);

struct ModelResult {
    NotchDepthValue value;
    std::uint32_t warnings = warn_none;
};

struct BreakpointsL {
    double l1 = 0.0;
    double l2 = 0.0;
    double l3 = 0.0;
};

struct BreakpointsINR {
    double inr1 = 0.0;
    double inr2 = 0.0;
};

/// Asymptotic |e1^H xi1|^2 between sample and ensemble principal
/// eigenvectors; zero at and below the phase transition inr = sqrt(c)/N.
double rmt_projection_sq(double aspect, int n_sensors, double inr);

/// (1 - proj_sq)/(N - 1): leakage of e1 onto any unit vector orthogonal to xi1.
double rmt_perp_projection_sq(double proj_sq, int n_sensors);

/// Mean notch depth as a function of snapshot count L at fixed params.inr.
ModelResult model_nd_vs_snapshots(const ModelParams &params, double snapshots);

/// Mean notch depth as a function of INR at fixed c = N / params.snapshots.
ModelResult model_nd_vs_inr(const ModelParams &params, double inr);

BreakpointsL breakpoints_snapshots(const ModelParams &params);
BreakpointsINR breakpoints_inr(const ModelParams &params);

} // namespace notchdepth
