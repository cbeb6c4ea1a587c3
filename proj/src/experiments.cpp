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

#include "notchdepth/experiments.hpp"
#include "notchdepth/errors.hpp"

#include "random.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <string>
#include <thread>

namespace notchdepth {

namespace {

constexpr Eigen::Index kAutoWishartThreshold = 4096;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool use_wishart(ScmMethod method, Eigen::Index snapshots, Eigen::Index sensors) {
    switch (method) {
    case ScmMethod::snapshots:
        return false;
    case ScmMethod::wishart:
        return true;
    case ScmMethod::automatic:
        return snapshots > kAutoWishartThreshold && snapshots > sensors;
    }
    return false;
}

Eigen::Index snapshot_count(double value) {
    if (!(value >= 1.0) || value != std::floor(value) ||
        value > static_cast<double>(std::numeric_limits<int>::max()))
        throw Error(ErrorCode::invalid_parameter,
                    "snapshot count must be a positive integer, got " + std::to_string(value));
    return static_cast<Eigen::Index>(value);
}

struct PointStats {
    double mean_db = kNaN;
    double stderr_db = kNaN;
};

PointStats reduce(const std::vector<double> &values, Averaging averaging) {
    // Accumulated in trial order so the result is independent of how trials
    // were scheduled.
    const auto count = static_cast<double>(values.size());
    PointStats out;
    if (averaging == Averaging::linear) {
        double sum = 0.0;
        for (double v : values)
            sum += v;
        const double mean = sum / count;
        out.mean_db = to_db(mean);
        if (values.size() > 1) {
            double ss = 0.0;
            for (double v : values)
                ss += (v - mean) * (v - mean);
            const double se = std::sqrt(ss / (count - 1.0) / count);
            out.stderr_db = 10.0 / std::numbers::ln10 * se / mean;
        }
    } else {
        double sum = 0.0;
        for (double v : values)
            sum += to_db(v);
        out.mean_db = sum / count;
        if (values.size() > 1) {
            double ss = 0.0;
            for (double v : values) {
                const double d = to_db(v) - out.mean_db;
                ss += d * d;
            }
            out.stderr_db = std::sqrt(ss / (count - 1.0) / count);
        }
    }
    return out;
}

// Runs body(t) for t in [0, trials) across the given number of threads. The first
// failure (lowest trial index) is rethrown after all workers join.
template <typename Body> void for_each_trial(int trials, int workers, Body &&body) {
    workers = std::clamp(workers, 1, trials);
    if (workers == 1) {
        for (int t = 0; t < trials; ++t)
            body(t);
        return;
    }
    std::vector<std::exception_ptr> failures(static_cast<std::size_t>(workers));
    std::vector<int> failed_at(static_cast<std::size_t>(workers), trials);
    {
        std::vector<std::jthread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (int t = w; t < trials; t += workers) {
                    try {
                        body(t);
                    } catch (...) {
                        failures[static_cast<std::size_t>(w)] = std::current_exception();
                        failed_at[static_cast<std::size_t>(w)] = t;
                        return;
                    }
                }
            });
        }
    }
    const auto first = std::min_element(failed_at.begin(), failed_at.end()) - failed_at.begin();
    if (failures[static_cast<std::size_t>(first)])
        std::rethrow_exception(failures[static_cast<std::size_t>(first)]);
}

std::string describe_point(const SweepSpec &spec, std::size_t index) {
    const char *axis = spec.axis == SweepAxis::snapshots ? "L" : "INR";
    return "sweep point " + std::to_string(index) + " (" + axis + " = " +
           std::to_string(spec.axis_values[index]) + ")";
}

} // namespace

void Scenario::validate() const {
    if (!(std::abs(look_u) <= 1.0) || !(std::abs(interferer_u) <= 1.0))
        throw Error(ErrorCode::invalid_direction, "scenario directions must lie in [-1, 1]");
    if (!(delta >= 0.0) || !std::isfinite(delta))
        throw Error(ErrorCode::invalid_parameter, "diagonal loading must be finite and non-negative");
}

AngleDecomposition Scenario::angles() const {
    return angle_decomposition(steering_vector(geometry, look_u), steering_vector(geometry, interferer_u));
}

std::uint64_t trial_seed(std::uint64_t master_seed, std::uint64_t axis_index,
                         std::uint64_t trial_index) noexcept {
    std::uint64_t h = detail::splitmix64(master_seed);
    h = detail::splitmix64(h ^ axis_index);
    return detail::splitmix64(h ^ (trial_index * 0xd1342543de82ef95ULL));
}

NotchDepthValue run_trial(const Scenario &scenario, Eigen::Index snapshots, double inr,
                          std::uint64_t seed, const TrialOptions &options) {
    scenario.validate();
    const SteeringVector v0 = steering_vector(scenario.geometry, scenario.look_u);
    const SteeringVector v1 = steering_vector(scenario.geometry, scenario.interferer_u);
    const CovarianceMatrix scm = use_wishart(options.scm, snapshots, v1.size())
                                     ? sample_cov_wishart(v1, inr, snapshots, seed)
                                     : sample_cov(generate_snapshots(v1, inr, snapshots, seed));
    const BeamformerWeights w = mvdr_weights(diagonal_load(scm, scenario.delta), v0);
    return notch_depth(w, v1);
}

void SweepSpec::validate() const {
    scenario.validate();
    if (axis_values.empty())
        throw Error(ErrorCode::invalid_parameter, "sweep axis is empty");
    for (std::size_t i = 0; i < axis_values.size(); ++i) {
        if (!(axis_values[i] > 0.0) || !std::isfinite(axis_values[i]))
            throw Error(ErrorCode::invalid_parameter, "sweep axis values must be positive");
        if (i > 0 && !(axis_values[i] > axis_values[i - 1]))
            throw Error(ErrorCode::invalid_parameter, "sweep axis values must be strictly increasing");
        if (axis == SweepAxis::snapshots)
            snapshot_count(axis_values[i]);
    }
    if (axis == SweepAxis::inr)
        snapshot_count(fixed_value);
    else if (!(fixed_value >= 0.0) || !std::isfinite(fixed_value))
        throw Error(ErrorCode::invalid_parameter, "fixed INR must be finite and non-negative");
    if (trials < 1)
        throw Error(ErrorCode::invalid_parameter, "sweep needs at least one trial");
    if (workers < 1)
        throw Error(ErrorCode::invalid_parameter, "sweep needs at least one worker");
}

NotchDepthCurve run_sweep(const SweepSpec &spec) {
    spec.validate();
    const Scenario &sc = spec.scenario;
    const AngleDecomposition angles = sc.angles();
    const int n = sc.geometry.n_sensors();

    NotchDepthCurve curve;
    curve.axis = spec.axis;
    curve.axis_values = spec.axis_values;
    curve.trials = spec.trials;
    curve.master_seed = spec.master_seed;

    std::vector<double> nd(static_cast<std::size_t>(spec.trials));
    for (std::size_t i = 0; i < spec.axis_values.size(); ++i) {
        const bool by_snapshots = spec.axis == SweepAxis::snapshots;
        const double snapshots = by_snapshots ? spec.axis_values[i] : spec.fixed_value;
        const double inr = by_snapshots ? spec.fixed_value : spec.axis_values[i];

        try {
            const ModelParams params = ModelParams::make(n, snapshots, inr, sc.delta, angles);
            const ModelResult model = by_snapshots ? model_nd_vs_snapshots(params, snapshots)
                                                   : model_nd_vs_inr(params, inr);
            curve.model_db.push_back(model.value.db);
            curve.model_warnings.push_back(model.warnings);
            curve.ensemble_db.push_back(
                ensemble_notch_depth({n, sc.delta, inr, angles.cos_sq}).db);

            if (spec.model_only) {
                curve.mc_mean_db.push_back(kNaN);
                curve.mc_stderr_db.push_back(kNaN);
                continue;
            }

            const Eigen::Index count = snapshot_count(snapshots);
            const TrialOptions options{spec.scm};
            for_each_trial(spec.trials, spec.workers, [&](int t) {
                const std::uint64_t seed = trial_seed(spec.master_seed, i, static_cast<std::uint64_t>(t));
                nd[static_cast<std::size_t>(t)] = run_trial(sc, count, inr, seed, options).linear;
            });
            const PointStats stats = reduce(nd, spec.averaging);
            curve.mc_mean_db.push_back(stats.mean_db);
            curve.mc_stderr_db.push_back(stats.stderr_db);
        } catch (const Error &e) {
            throw Error(e.code(), describe_point(spec, i) + ": " + e.what());
        }
    }
    return curve;
}

RmtValidation validate_rmt_projection(const Scenario &scenario, Eigen::Index snapshots, double inr,
                                      int trials, std::uint64_t master_seed) {
    scenario.validate();
    if (trials < 1)
        throw Error(ErrorCode::invalid_parameter, "validation needs at least one trial");
    if (snapshots < 1)
        throw Error(ErrorCode::invalid_parameter, "validation needs at least one snapshot");

    const int n = scenario.geometry.n_sensors();
    const SteeringVector v0 = steering_vector(scenario.geometry, scenario.look_u);
    const SteeringVector v1 = steering_vector(scenario.geometry, scenario.interferer_u);
    const ComplexVector xi1 = v1.elements() / std::sqrt(static_cast<double>(n));

    // Gram-Schmidt residual of v0 against xi1.
    ComplexVector xi_perp = v0.elements() - xi1 * xi1.dot(v0.elements());
    const double perp_norm = xi_perp.norm();
    const bool has_perp = perp_norm > 1e-9 * v0.elements().norm();
    if (has_perp)
        xi_perp /= perp_norm;

    double sum = 0.0;
    double perp_sum = 0.0;
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t seed = trial_seed(master_seed, 0, static_cast<std::uint64_t>(t));
        const EigenSystem eig = eigensystem(sample_cov(generate_snapshots(v1, inr, snapshots, seed)));
        const auto e1 = eig.eigenvectors.col(0);
        sum += std::norm(e1.dot(xi1));
        if (has_perp)
            perp_sum += std::norm(e1.dot(xi_perp));
    }

    const double aspect = static_cast<double>(n) / static_cast<double>(snapshots);
    RmtValidation out;
    out.trials = trials;
    out.empirical_mean = sum / trials;
    out.model = rmt_projection_sq(aspect, n, inr);
    out.below_transition = inr <= std::sqrt(aspect) / n;
    if (has_perp && n >= 2) {
        out.empirical_perp_mean = perp_sum / trials;
        out.model_perp = rmt_perp_projection_sq(out.model, n);
    } else {
        out.empirical_perp_mean = kNaN;
        out.model_perp = kNaN;
    }
    return out;
}

} // namespace notchdepth
