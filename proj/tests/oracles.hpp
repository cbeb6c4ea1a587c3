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

// Independent reference computations used only by the tests. None of these
// call into the library's solve or weight paths.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

namespace oracle {

// Generalized cosine squared for a half-wavelength ULA from the Dirichlet
// kernel |sin(N x/2) / (N sin(x/2))|^2 with x = pi (u1 - u0).
inline double dirichlet_cos_sq(int n, double u0, double u1) {
    const double x = std::numbers::pi * (u1 - u0);
    const double s = std::sin(x / 2.0);
    if (std::abs(s) < 1e-300)
        return 1.0;
    const double r = std::sin(n * x / 2.0) / (n * s);
    return r * r;
}

// Steering vector built from explicit cos/sin, phase +pi n u.
inline Eigen::VectorXcd steering(int n, double u) {
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i)
        v(i) = {std::cos(std::numbers::pi * i * u), std::sin(std::numbers::pi * i * u)};
    return v;
}

// (sigma^2 v1 v1^H + (1 + delta) I)^-1 v0 by Sherman-Morrison.
inline Eigen::VectorXcd sherman_morrison_solve(const Eigen::VectorXcd &v0, const Eigen::VectorXcd &v1,
                                               double inr, double delta) {
    const double d = 1.0 + delta;
    const std::complex<double> proj = v1.dot(v0); // v1^H v0
    const double n = v1.squaredNorm();
    return (v0 - (inr * proj / (d + inr * n)) * v1) / d;
}

// Notch depth of the ensemble DL-MVDR, from the Sherman-Morrison solve.
inline double ensemble_nd_sherman_morrison(int n, double u0, double u1, double inr, double delta) {
    const Eigen::VectorXcd v0 = steering(n, u0);
    const Eigen::VectorXcd v1 = steering(n, u1);
    const Eigen::VectorXcd y = sherman_morrison_solve(v0, v1, inr, delta);
    const std::complex<double> denom = v0.dot(y);
    const Eigen::VectorXcd w = y / denom;
    return std::norm(w.dot(v1));
}

inline Eigen::MatrixXcd random_hpd(int n, std::mt19937_64 &rng, double ridge = 0.1) {
    std::normal_distribution<double> g;
    Eigen::MatrixXcd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            a(i, j) = {g(rng), g(rng)};
    Eigen::MatrixXcd m = a * a.adjoint() / n;
    m.diagonal().array() += ridge;
    // exact Hermitian
    Eigen::MatrixXcd h = (m + m.adjoint()) / 2.0;
    for (int i = 0; i < n; ++i)
        h(i, i) = h(i, i).real();
    return h;
}

inline Eigen::VectorXcd random_vector(int n, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    Eigen::VectorXcd v(n);
    for (int i = 0; i < n; ++i)
        v(i) = {g(rng), g(rng)};
    return v;
}

} // namespace oracle
