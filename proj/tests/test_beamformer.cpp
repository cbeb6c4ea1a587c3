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

#include <doctest.h>

#include "notchdepth/beamformer.hpp"
#include "notchdepth/errors.hpp"

#include "oracles.hpp"

#include <random>

using namespace notchdepth;

namespace {

ErrorCode code_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::invalid_input;
}

void check_distortionless(const BeamformerWeights &w, const SteeringVector &v0) {
    const Complex r = w.weights().dot(v0.elements());
    CHECK(std::abs(r.real() - 1.0) < 1e-10);
    CHECK(std::abs(r.imag()) < 1e-10);
}

const ArrayGeometry kArray(50);

} // namespace

TEST_CASE("dB conversion") {
    CHECK(to_db(1.0) == 0.0);
    CHECK(to_db(1e-3) == doctest::Approx(-30.0));
    CHECK(from_db(-30.0) == doctest::Approx(1e-3));
    CHECK(std::isinf(to_db(0.0)));
    const auto v = NotchDepthValue::from_linear(4.4557e-9);
    CHECK(v.db == doctest::Approx(10.0 * std::log10(4.4557e-9)));
}

TEST_CASE("weights constructor enforces the constraint") {
    const auto v0 = steering_vector(kArray, 0.0);
    CHECK(code_of([&] { BeamformerWeights(v0.elements(), v0); }) == ErrorCode::invalid_input);
    CHECK(code_of([&] { BeamformerWeights(ComplexVector::Ones(3), v0); }) == ErrorCode::dimension);
}

TEST_CASE("MVDR with identity covariance is the conventional beamformer") {
    const auto v0 = steering_vector(kArray, 0.2);
    const CovarianceMatrix id(ComplexMatrix::Identity(50, 50), CovarianceKind::ensemble);
    const auto w = mvdr_weights(id, v0);
    CHECK((w.weights() - v0.elements() / 50.0).norm() < 1e-15);
    check_distortionless(w, v0);
    CHECK(w.look_direction() == 0.2);
}

TEST_CASE("ensemble DL-MVDR notch depth at the first sidelobe") {
    const auto v0 = steering_vector(kArray, 0.0);
    const auto v1 = steering_vector(kArray, 0.06);
    const auto w = mvdr_weights(diagonal_load(ensemble_cov(v1, 100.0), 0.5), v0);
    check_distortionless(w, v0);
    const auto nd = notch_depth(w, v1);
    const double ref = oracle::ensemble_nd_sherman_morrison(50, 0.0, 0.06, 100.0, 0.5);
    CHECK(nd.linear == doctest::Approx(ref).epsilon(1e-9));
    // frozen from the Sherman-Morrison oracle: 4.4557128097915385e-09
    CHECK(nd.linear == doctest::Approx(4.4557128097915385e-09).epsilon(1e-9));
    CHECK(nd.db == doctest::Approx(-83.51).epsilon(1e-3));
}

TEST_CASE("distortionless for random HPD covariances") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 4 + trial % 40;
        const auto v0 = steering_vector(ArrayGeometry(n), u(rng));
        const auto w = mvdr_weights(CovarianceMatrix(oracle::random_hpd(n, rng), CovarianceKind::sample), v0);
        check_distortionless(w, v0);
    }
}

TEST_CASE("weights are invariant to covariance scaling") {
    std::mt19937_64 rng(23);
    const auto v0 = steering_vector(ArrayGeometry(12), 0.1);
    const ComplexMatrix m = oracle::random_hpd(12, rng);
    const auto w = mvdr_weights(CovarianceMatrix(m, CovarianceKind::sample), v0);
    for (double c : {0.1, 10.0}) {
        const auto wc = mvdr_weights(CovarianceMatrix(m * c, CovarianceKind::sample), v0);
        CHECK((wc.weights() - w.weights()).norm() < 1e-10 * w.weights().norm());
    }
}

TEST_CASE("MVDR errors") {
    const auto v0 = steering_vector(kArray, 0.0);
    const CovarianceMatrix small(ComplexMatrix::Identity(4, 4), CovarianceKind::ensemble);
    CHECK(code_of([&] { mvdr_weights(small, v0); }) == ErrorCode::dimension);
    const CovarianceMatrix zero(ComplexMatrix::Zero(50, 50), CovarianceKind::sample);
    CHECK(code_of([&] { mvdr_weights(zero, v0); }) == ErrorCode::singular_matrix);
}

TEST_CASE("beampattern") {
    const auto v0 = steering_vector(kArray, 0.0);
    const auto cbf = conventional_weights(v0);
    CHECK(beampattern(cbf, kArray, 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(beampattern(cbf, kArray, 0.04) < 1e-12);
    CHECK(beampattern(cbf, kArray, 0.06) == doctest::Approx(0.045165207712601144).epsilon(1e-12));
    CHECK(beampattern(cbf, kArray, 0.06) ==
          doctest::Approx(generalized_cosine_sq(v0, steering_vector(kArray, 0.06))).epsilon(1e-12));
    CHECK(code_of([&] { beampattern(cbf, kArray, 1.5); }) == ErrorCode::invalid_direction);
    CHECK(code_of([&] { beampattern(cbf, ArrayGeometry(10), 0.1); }) == ErrorCode::dimension);

    std::mt19937_64 rng(2);
    const auto w = mvdr_weights(CovarianceMatrix(oracle::random_hpd(50, rng), CovarianceKind::sample),
                                steering_vector(kArray, -0.3));
    CHECK(beampattern(w, kArray, -0.3) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("notch depth definitions") {
    const auto v0 = steering_vector(kArray, 0.0);
    const auto v1 = steering_vector(kArray, 0.06);
    const auto cbf = conventional_weights(v0);
    CHECK(notch_depth(cbf, v1).linear == doctest::Approx(generalized_cosine_sq(v0, v1)).epsilon(1e-12));
    CHECK(notch_depth(cbf, v0).linear == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(std::abs(notch_depth(cbf, v0).db) < 1e-12);
    CHECK(code_of([&] { notch_depth(cbf, steering_vector(ArrayGeometry(4), 0.0)); }) == ErrorCode::dimension);
}

TEST_CASE("ensemble notch depth closed form") {
    const double cos_sq = 0.045165207712601144;
    SUBCASE("zero INR reduces to the CBF sidelobe") {
        CHECK(ensemble_notch_depth({50, 0.5, 0.0, cos_sq}).linear == doctest::Approx(cos_sq));
    }
    SUBCASE("interferer in the look direction") {
        CHECK(ensemble_notch_depth({50, 0.5, 100.0, 1.0}).linear == doctest::Approx(1.0));
    }
    SUBCASE("first sidelobe scenario") {
        const auto nd = ensemble_notch_depth({50, 0.5, 100.0, cos_sq});
        CHECK(nd.linear == doctest::Approx(4.4557128097915385e-09).epsilon(1e-9));
    }
    SUBCASE("invalid inputs") {
        CHECK(code_of([&] { ensemble_notch_depth({50, -0.5, 1.0, cos_sq}); }) == ErrorCode::invalid_parameter);
        CHECK(code_of([&] { ensemble_notch_depth({50, 0.5, -1.0, cos_sq}); }) == ErrorCode::invalid_parameter);
    }
}

TEST_CASE("closed form equals solve-based ensemble notch depth") {
    std::mt19937_64 rng(101);
    std::uniform_int_distribution<int> n_dist(8, 64);
    std::uniform_real_distribution<double> delta_dist(0.01, 3.0);
    std::uniform_real_distribution<double> inr_db(0.0, 40.0);
    std::uniform_real_distribution<double> u(-0.9, 0.9);
    for (int trial = 0; trial < 100; ++trial) {
        const ArrayGeometry g(n_dist(rng));
        const double delta = delta_dist(rng);
        const double inr = from_db(inr_db(rng));
        const auto v0 = steering_vector(g, u(rng));
        const auto v1 = steering_vector(g, u(rng));
        const double cos_sq = generalized_cosine_sq(v0, v1);
        const auto w = mvdr_weights(diagonal_load(ensemble_cov(v1, inr), delta), v0);
        check_distortionless(w, v0);
        const double direct = notch_depth(w, v1).linear;
        const double closed = ensemble_notch_depth({g.n_sensors(), delta, inr, cos_sq}).linear;
        CHECK(std::abs(direct - closed) <= 1e-9 * closed);
    }
}

TEST_CASE("ensemble notch depth monotonicity") {
    for (double cos_sq : {0.01, 0.045, 0.3, 0.9}) {
        for (double delta : {0.0, 0.1, 0.5, 2.0}) {
            double prev = 2.0;
            for (double inr_db = -20.0; inr_db <= 50.0; inr_db += 2.0) {
                const double nd = ensemble_notch_depth({50, delta, from_db(inr_db), cos_sq}).linear;
                CHECK(nd <= prev);
                prev = nd;
            }
        }
        for (double inr_db : {0.0, 20.0, 40.0}) {
            double prev = 0.0;
            for (double delta = 0.0; delta <= 5.0; delta += 0.25) {
                const double nd = ensemble_notch_depth({50, delta, from_db(inr_db), cos_sq}).linear;
                CHECK(nd >= prev);
                prev = nd;
            }
        }
    }
}
