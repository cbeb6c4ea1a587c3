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

#include "notchdepth/beamformer.hpp"
#include "notchdepth/errors.hpp"

#include <cmath>
#include <limits>

namespace notchdepth {

BeamformerWeights::BeamformerWeights(ComplexVector weights, const SteeringVector &look)
    : weights_(std::move(weights)), look_u_(look.direction_cosine()) {
    if (weights_.size() != look.size())
        throw Error(ErrorCode::dimension, "weights and look steering vector differ in length");
    const Complex response = weights_.dot(look.elements()); // w^H v0
    if (!(std::abs(response.real() - 1.0) < 1e-10) || !(std::abs(response.imag()) < 1e-10))
        throw Error(ErrorCode::invalid_input, "weights violate the distortionless constraint");
}

NotchDepthValue NotchDepthValue::from_linear(double value) { return {value, to_db(value)}; }

double to_db(double linear) {
    if (linear > 0.0)
        return 10.0 * std::log10(linear);
    return linear == 0.0 ? -std::numeric_limits<double>::infinity()
                         : std::numeric_limits<double>::quiet_NaN();
}

double from_db(double db) { return std::pow(10.0, db / 10.0); }

BeamformerWeights conventional_weights(const SteeringVector &v0) {
    return BeamformerWeights(v0.elements() / v0.elements().squaredNorm(), v0);
}

BeamformerWeights mvdr_weights(const CovarianceMatrix &cov, const SteeringVector &v0) {
    if (cov.size() != v0.size())
        throw Error(ErrorCode::dimension, "covariance and steering vector differ in size");
    const ComplexVector y = solve_hpd(cov, v0.elements());
    // Dividing by the complex value of v0^H y (real and positive in exact
    // arithmetic) makes w^H v0 = 1 hold without a rounding residue in the
    // imaginary part.
    const Complex denom = v0.elements().dot(y);
    if (!(denom.real() > 0.0))
        throw Error(ErrorCode::singular_matrix, "MVDR normalization is not positive");
    return BeamformerWeights(y / denom, v0);
}

double beampattern(const BeamformerWeights &w, const ArrayGeometry &geometry, double u) {
    if (w.weights().size() != geometry.n_sensors())
        throw Error(ErrorCode::dimension, "weights do not match the array geometry");
    const SteeringVector v = steering_vector(geometry, u);
    return std::norm(w.weights().dot(v.elements()));
}

NotchDepthValue notch_depth(const BeamformerWeights &w, const SteeringVector &v1) {
    if (w.weights().size() != v1.size())
        throw Error(ErrorCode::dimension, "weights and interferer steering vector differ in length");
    return NotchDepthValue::from_linear(std::norm(w.weights().dot(v1.elements())));
}

NotchDepthValue ensemble_notch_depth(const EnsembleNotchInputs &in) {
    if (!(in.delta >= 0.0) || !(in.inr >= 0.0) || in.n_sensors < 1)
        throw Error(ErrorCode::invalid_parameter, "ensemble notch depth needs N >= 1, delta >= 0, INR >= 0");
    const double sin_sq = 1.0 - in.cos_sq;
    const double num = in.cos_sq * (1.0 + in.delta) * (1.0 + in.delta);
    const double den = 1.0 + in.delta + in.n_sensors * in.inr * sin_sq;
    return NotchDepthValue::from_linear(num / (den * den));
}

} // namespace notchdepth
