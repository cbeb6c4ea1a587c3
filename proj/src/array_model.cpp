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

#include "notchdepth/array_model.hpp"
#include "notchdepth/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace notchdepth {

ArrayGeometry::ArrayGeometry(int n_sensors, double spacing_wavelengths)
    : n_sensors_(n_sensors), spacing_(spacing_wavelengths) {
    if (n_sensors_ < 1)
        throw Error(ErrorCode::invalid_parameter,
                    "array needs at least one sensor, got " + std::to_string(n_sensors_));
    if (!(spacing_ > 0.0) || !std::isfinite(spacing_))
        throw Error(ErrorCode::invalid_parameter, "element spacing must be positive");
}

SteeringVector steering_vector(const ArrayGeometry &geometry, double u) {
    if (!(std::abs(u) <= 1.0))
        throw Error(ErrorCode::invalid_direction,
                    "direction cosine must lie in [-1, 1], got " + std::to_string(u));
    const int n = geometry.n_sensors();
    const double k = 2.0 * std::numbers::pi * geometry.spacing_wavelengths() * u;
    ComplexVector v(n);
    for (int i = 0; i < n; ++i)
        v(i) = std::polar(1.0, k * i);
    return SteeringVector(std::move(v), u);
}

double generalized_cosine_sq(const SteeringVector &v0, const SteeringVector &v1) {
    if (v0.size() != v1.size())
        throw Error(ErrorCode::dimension, "steering vectors differ in length");
    const double inner = std::norm(v0.elements().dot(v1.elements()));
    const double scale = v0.elements().squaredNorm() * v1.elements().squaredNorm();
    return std::clamp(inner / scale, 0.0, 1.0);
}

AngleDecomposition angle_decomposition(const SteeringVector &v0, const SteeringVector &v1) {
    AngleDecomposition out;
    out.cos_sq = generalized_cosine_sq(v0, v1);
    out.sin_sq = 1.0 - out.cos_sq;
    const double root_n = std::sqrt(static_cast<double>(v0.size()));
    out.alpha = root_n * std::sqrt(out.cos_sq);
    out.beta = root_n * std::sqrt(out.sin_sq);
    return out;
}

} // namespace notchdepth
