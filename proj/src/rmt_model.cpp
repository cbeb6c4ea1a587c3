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

#include "notchdepth/rmt_model.hpp"
#include "notchdepth/errors.hpp"

#include <cmath>
#include <string>

namespace notchdepth {

namespace {

constexpr double kDegenerateTol = 1e-12;
constexpr double kAssumptionFloor = 10.0; // ">>" taken as a factor of 10

void require_positive(double value, const char *name) {
    if (!(value > 0.0) || !std::isfinite(value))
        throw Error(ErrorCode::invalid_parameter, std::string(name) + " must be finite and positive");
}

std::uint32_t assumption_flags(const ModelParams &p, double inr, double aspect) {
    std::uint32_t flags = warn_none;
    if (p.n_sensors < kAssumptionFloor)
        flags |= warn_short_array;
    if (p.n_sensors * inr < kAssumptionFloor)
        flags |= warn_weak_interferer;
    if (inr * p.tan_sq < kAssumptionFloor)
        flags |= warn_mainlobe;
    if (aspect <= 1.0) {
        const double edge = 1.0 - std::sqrt(aspect);
        if (p.delta <= edge * edge)
            flags |= warn_low_loading;
    }
    return flags;
}

} // namespace

ModelParams ModelParams::make(int n_sensors, double snapshots, double inr, double delta,
                              const AngleDecomposition &angles) {
    if (n_sensors < 1)
        throw Error(ErrorCode::invalid_parameter, "model needs at least one sensor");
    require_positive(snapshots, "snapshot count");
    if (!(inr >= 0.0) || !std::isfinite(inr))
        throw Error(ErrorCode::invalid_parameter, "INR must be finite and non-negative");
    if (!(delta >= 0.0) || !std::isfinite(delta))
        throw Error(ErrorCode::invalid_parameter, "diagonal loading must be finite and non-negative");
    if (angles.cos_sq < kDegenerateTol || angles.sin_sq < kDegenerateTol)
        throw Error(ErrorCode::degenerate_geometry,
                    "look and interferer directions are aligned or orthogonal; tan and cot are undefined");

    ModelParams p;
    p.n_sensors = n_sensors;
    p.snapshots = snapshots;
    p.inr = inr;
    p.delta = delta;
    p.cos_sq = angles.cos_sq;
    p.sin_sq = angles.sin_sq;
    p.tan_sq = angles.sin_sq / angles.cos_sq;
    p.cot_sq = angles.cos_sq / angles.sin_sq;
    return p;
}

std::vector<std::string> describe_warnings(std::uint32_t flags) {
    std::vector<std::string> out;
    if (flags & warn_short_array)
        out.emplace_back("array is short (N < 10)");
    if (flags & warn_weak_interferer)
        out.emplace_back("interferer is weak (N * INR < 10)");
    if (flags & warn_mainlobe)
        out.emplace_back("interferer is near the main lobe (INR * tan^2 < 10)");
    if (flags & warn_low_loading)
        out.emplace_back("loading below (1 - sqrt(c))^2 for c <= 1");
    return out;
}

double rmt_projection_sq(double aspect, int n_sensors, double inr) {
    require_positive(aspect, "aspect ratio");
    if (n_sensors < 1)
        throw Error(ErrorCode::invalid_parameter, "projection needs at least one sensor");
    if (!(inr >= 0.0))
        throw Error(ErrorCode::invalid_parameter, "INR must be non-negative");
    if (inr <= std::sqrt(aspect) / n_sensors)
        return 0.0;
    const double spike = n_sensors * inr;
    return (1.0 - aspect / (spike * spike)) / (1.0 + aspect / spike);
}

double rmt_perp_projection_sq(double proj_sq, int n_sensors) {
    if (n_sensors < 2)
        throw Error(ErrorCode::invalid_parameter, "orthogonal leakage needs at least two sensors");
    if (!(proj_sq >= 0.0 && proj_sq <= 1.0))
        throw Error(ErrorCode::invalid_parameter, "projection must lie in [0, 1]");
    return (1.0 - proj_sq) / (n_sensors - 1);
}

ModelResult model_nd_vs_snapshots(const ModelParams &p, double snapshots) {
    require_positive(snapshots, "snapshot count");
    require_positive(p.inr, "INR");
    const double n = p.n_sensors;
    const double sigma = std::sqrt(p.inr);
    const double root_l = std::sqrt(snapshots);

    const double f1 = n + snapshots * (1.0 + p.delta + n * p.inr * p.sin_sq);
    const double f2 = root_l - std::sqrt(n) * std::sqrt(p.cot_sq) / sigma;
    const double f3 = root_l - std::sqrt(n) * sigma * std::sqrt(p.tan_sq) / (1.0 + p.delta);

    const double load = (1.0 + p.delta) * (1.0 + p.delta);
    const double ratio = (f3 * f2) / f1;
    ModelResult out;
    out.value = NotchDepthValue::from_linear(p.cos_sq * load * ratio * ratio);
    out.warnings = assumption_flags(p, p.inr, n / snapshots);
    return out;
}

ModelResult model_nd_vs_inr(const ModelParams &p, double inr) {
    if (!(inr >= 0.0) || !std::isfinite(inr))
        throw Error(ErrorCode::invalid_parameter, "INR must be finite and non-negative");
    const double c = p.aspect();
    const double shift = 1.0 + c + p.delta;
    const double num = std::sqrt(inr) * std::sqrt(c) * std::sqrt(p.tan_sq) - shift;
    const double den = p.n_sensors * inr * p.sin_sq + shift;
    ModelResult out;
    out.value = NotchDepthValue::from_linear(p.cos_sq * (num * num) / (den * den));
    out.warnings = assumption_flags(p, inr, c);
    return out;
}

BreakpointsL breakpoints_snapshots(const ModelParams &p) {
    require_positive(p.inr, "INR");
    const double n = p.n_sensors;
    BreakpointsL out;
    out.l1 = n / (p.delta + p.inr * n * p.sin_sq);
    out.l2 = n * p.cot_sq / p.inr;
    out.l3 = n * p.inr * p.tan_sq / ((1.0 + p.delta) * (1.0 + p.delta));
    return out;
}

BreakpointsINR breakpoints_inr(const ModelParams &p) {
    const double c = p.aspect();
    const double shift = 1.0 + c + p.delta;
    BreakpointsINR out;
    out.inr1 = shift / (p.n_sensors * p.sin_sq);
    out.inr2 = shift * shift / (c * p.tan_sq);
    return out;
}

} // namespace notchdepth
