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

#include "notchdepth/beamformer.hpp"
#include "notchdepth/rmt_model.hpp"

#include <cstdint>
#include <vector>

namespace notchdepth {

struct Scenario {
    ArrayGeometry geometry{50};
    double look_u = 0.0;
    double interferer_u = 0.06;
    double delta = 0.5;

    void validate() const;
    AngleDecomposition angles() const;
};

enum class SweepAxis { snapshots, inr };

/// Domain in which per-trial notch depths are averaged. `linear` averages
/// |w^H v1|^2 and converts the mean to dB; `db` averages the per-trial dB
/// values.
enum class Averaging { linear, db };

/// How a trial obtains its sample covariance. `snapshots` draws every
/// snapshot; `wishart` draws the SCM directly (same distribution, cost
/// independent of L, needs L > N); `automatic` uses wishart once L > 4096.
enum class ScmMethod { snapshots, wishart, automatic };

struct TrialOptions {
    ScmMethod scm = ScmMethod::snapshots;
};

/// Per-trial seed derived by mixing (master seed, axis index, trial index)
/// with SplitMix64 finalizers. Sweep results depend only on these seeds, not
/// on scheduling.
std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t axis_index,
                         std::uint64_t trial_index) noexcept;

/// One Monte Carlo trial: L snapshots -> SCM -> load by delta -> DL-MVDR
/// weights at look_u -> notch depth at interferer_u.
NotchDepthValue run_trial(const Scenario &scenario, Eigen::Index snapshots, double inr,
                          std::uint64_t seed, const TrialOptions &options = {});

struct SweepSpec {
    Scenario scenario;
    SweepAxis axis = SweepAxis::snapshots;
    /// L values for snapshot sweeps, linear INR for INR sweeps. Strictly
    /// increasing and positive.
    std::vector<double> axis_values;
    /// Linear INR for snapshot sweeps, L for INR sweeps.
    double fixed_value = 0.0;
    int trials = 500;
    std::uint64_t master_seed = 0;
    Averaging averaging = Averaging::linear;
    ScmMethod scm = ScmMethod::snapshots;
    /// Worker threads; results do not depend on this.
    int workers = 1;
    /// Skip the Monte Carlo; mc columns come back as NaN.
    bool model_only = false;

    void validate() const;
};

struct NotchDepthCurve {
    SweepAxis axis = SweepAxis::snapshots;
    std::vector<double> axis_values;
    std::vector<double> mc_mean_db;
    std::vector<double> mc_stderr_db;
    std::vector<double> model_db;
    std::vector<double> ensemble_db;
    std::vector<std::uint32_t> model_warnings;
    int trials = 0;
    std::uint64_t master_seed = 0;

    std::size_t size() const noexcept { return axis_values.size(); }
};

NotchDepthCurve run_sweep(const SweepSpec &spec);

struct RmtValidation {
    double empirical_mean = 0.0;      // mean |e1^H xi1|^2
    double model = 0.0;               // rmt_projection_sq
    double empirical_perp_mean = 0.0; // mean |e1^H xi_perp|^2
    double model_perp = 0.0;          // rmt_perp_projection_sq
    bool below_transition = false;    // inr <= sqrt(c)/N
    int trials = 0;
};

/// Compares the sample principal eigenvector against xi1 = v1/sqrt(N) over
/// `trials` independent SCMs. xi_perp is the Gram-Schmidt residual of v0
/// against xi1; it needs look_u != interferer_u.
RmtValidation validate_rmt_projection(const Scenario &scenario, Eigen::Index snapshots, double inr,
                                      int trials, std::uint64_t master_seed);

} // namespace notchdepth
