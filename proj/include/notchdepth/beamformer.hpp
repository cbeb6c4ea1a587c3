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

#include "notchdepth/covariance.hpp"

namespace notchdepth {

/// Weight vector satisfying w^H v0 = 1. The constructor rejects vectors that
/// violate the constraint by more than 1e-10 in either component.
class BeamformerWeights {
  public:
    BeamformerWeights(ComplexVector weights, const SteeringVector &look);

    const ComplexVector &weights() const noexcept { return weights_; }
    double look_direction() const noexcept { return look_u_; }

  private:
    ComplexVector weights_;
    double look_u_;
};

struct NotchDepthValue {
    double linear = 0.0;
    double db = 0.0;

    static NotchDepthValue from_linear(double value);
};

double to_db(double linear);
double from_db(double db);

/// Conventional (delay-and-sum) weights v0 / N.
BeamformerWeights conventional_weights(const SteeringVector &v0);

/// MVDR weights cov^-1 v0 / (v0^H cov^-1 v0), computed through solve_hpd.
BeamformerWeights mvdr_weights(const CovarianceMatrix &cov, const SteeringVector &v0);

/// |w^H v(u)|^2
double beampattern(const BeamformerWeights &w, const ArrayGeometry &geometry, double u);

/// Beampattern at the true interferer steering vector.
NotchDepthValue notch_depth(const BeamformerWeights &w, const SteeringVector &v1);

struct EnsembleNotchInputs {
    int n_sensors = 0;
    double delta = 0.0;
    double inr = 0.0;
    double cos_sq = 0.0;
};

/// Closed form for the ideally achievable notch depth with the ensemble
/// covariance known:
///   cos^2 (1 + delta)^2 / (1 + delta + N inr sin^2)^2
NotchDepthValue ensemble_notch_depth(const EnsembleNotchInputs &in);

} // namespace notchdepth
