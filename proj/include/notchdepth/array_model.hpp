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

#include <Eigen/Dense>

#include <complex>

namespace notchdepth {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

/// Uniform linear array. Directions everywhere in the library are direction
/// cosines u = cos(theta) measured from the array axis.
class ArrayGeometry {
  public:
    explicit ArrayGeometry(int n_sensors, double spacing_wavelengths = 0.5);

    int n_sensors() const noexcept { return n_sensors_; }
    double spacing_wavelengths() const noexcept { return spacing_; }

  private:
    int n_sensors_;
    double spacing_;
};

/// Plane-wave steering vector. Element n carries phase exp(+i 2 pi d n u) with
/// the first element as phase reference, so every element has unit modulus
/// and the squared norm is exactly N.
class SteeringVector {
  public:
    SteeringVector(ComplexVector elements, double direction_cosine)
        : elements_(std::move(elements)), u_(direction_cosine) {}

    const ComplexVector &elements() const noexcept { return elements_; }
    double direction_cosine() const noexcept { return u_; }
    Eigen::Index size() const noexcept { return elements_.size(); }

  private:
    ComplexVector elements_;
    double u_;
};

/// Split of the look-direction steering vector onto the interferer direction
/// and its orthogonal complement. alpha = sqrt(N) cos, beta = sqrt(N) sin.
struct AngleDecomposition {
    double cos_sq = 0.0;
    double sin_sq = 0.0;
    double alpha = 0.0;
    double beta = 0.0;

    double tan_sq() const { return sin_sq / cos_sq; }
    double cot_sq() const { return cos_sq / sin_sq; }
};

/// Throws ErrorCode::invalid_direction for |u| > 1.
SteeringVector steering_vector(const ArrayGeometry &geometry, double u);

/// |v0^H v1|^2 / (|v0|^2 |v1|^2)
double generalized_cosine_sq(const SteeringVector &v0, const SteeringVector &v1);

AngleDecomposition angle_decomposition(const SteeringVector &v0, const SteeringVector &v1);

} // namespace notchdepth
