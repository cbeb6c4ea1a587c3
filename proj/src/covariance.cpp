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

#include "notchdepth/covariance.hpp"
#include "notchdepth/errors.hpp"

#include "random.hpp"

#include <cmath>
#include <string>

namespace notchdepth {

namespace {

double max_abs(const ComplexMatrix &m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

void require_inr(double inr) {
    if (!(inr >= 0.0) || !std::isfinite(inr))
        throw Error(ErrorCode::invalid_parameter,
                    "INR must be finite and non-negative, got " + std::to_string(inr));
}

// Copies the lower triangle onto the upper one and zeroes the imaginary part
// of the diagonal, so the result is Hermitian to the last bit.
void make_hermitian(ComplexMatrix &m) {
    const Eigen::Index n = m.rows();
    for (Eigen::Index j = 0; j < n; ++j) {
        m(j, j) = Complex(m(j, j).real(), 0.0);
        for (Eigen::Index i = j + 1; i < n; ++i)
            m(j, i) = std::conj(m(i, j));
    }
}

// scale * columns * columns^H
ComplexMatrix scaled_gram(const ComplexMatrix &columns, double scale) {
    const Eigen::Index n = columns.rows();
    ComplexMatrix s = ComplexMatrix::Zero(n, n);
    s.selfadjointView<Eigen::Lower>().rankUpdate(columns, scale);
    make_hermitian(s);
    return s;
}

} // namespace

CovarianceMatrix::CovarianceMatrix(ComplexMatrix entries, CovarianceKind kind)
    : entries_(std::move(entries)), kind_(kind) {
    if (entries_.rows() != entries_.cols() || entries_.rows() == 0)
        throw Error(ErrorCode::dimension, "covariance matrix must be square and non-empty");
    if (!entries_.allFinite())
        throw Error(ErrorCode::invalid_input, "covariance matrix has non-finite entries");
    const double skew = max_abs(entries_ - entries_.adjoint());
    if (skew > 1e-12 * max_abs(entries_))
        throw Error(ErrorCode::invalid_input, "covariance matrix is not Hermitian");
}

CovarianceMatrix ensemble_cov(const SteeringVector &v1, double inr) {
    require_inr(inr);
    const auto &v = v1.elements();
    ComplexMatrix sigma = inr * v * v.adjoint();
    sigma.diagonal().array() += 1.0;
    make_hermitian(sigma);
    return CovarianceMatrix(std::move(sigma), CovarianceKind::ensemble);
}

SnapshotBatch generate_snapshots(const SteeringVector &v1, double inr, Eigen::Index snapshots,
                                 std::uint64_t seed) {
    require_inr(inr);
    if (snapshots < 1)
        throw Error(ErrorCode::invalid_parameter, "need at least one snapshot");

    auto engine = detail::make_engine(seed);
    detail::ComplexGaussian amplitude(inr);
    detail::ComplexGaussian noise(1.0);

    const auto &v = v1.elements();
    const Eigen::Index n = v.size();
    SnapshotBatch batch;
    batch.seed = seed;
    batch.inr = inr;
    batch.interferer_u = v1.direction_cosine();
    batch.data.resize(n, snapshots);
    for (Eigen::Index l = 0; l < snapshots; ++l) {
        const Complex a = amplitude(engine);
        for (Eigen::Index i = 0; i < n; ++i)
            batch.data(i, l) = a * v(i) + noise(engine);
    }
    return batch;
}

CovarianceMatrix sample_cov(const SnapshotBatch &batch) {
    if (batch.data.cols() < 1 || batch.data.rows() < 1)
        throw Error(ErrorCode::invalid_input, "empty snapshot batch");
    if (!batch.data.allFinite())
        throw Error(ErrorCode::invalid_input, "snapshot batch has non-finite entries");
    const double scale = 1.0 / static_cast<double>(batch.data.cols());
    return CovarianceMatrix(scaled_gram(batch.data, scale), CovarianceKind::sample);
}

CovarianceMatrix sample_cov_wishart(const SteeringVector &v1, double inr, Eigen::Index snapshots,
                                    std::uint64_t seed) {
    require_inr(inr);
    const Eigen::Index n = v1.size();
    const Eigen::Index m = n + 1;
    if (snapshots <= n)
        throw Error(ErrorCode::invalid_parameter,
                    "Wishart sampling needs more snapshots than sensors");

    // Bartlett factor A of W = A A^H ~ CW_m(L, I): |A_ii|^2 ~ Gamma(L - i, 1),
    // strictly lower entries CN(0, 1).
    auto engine = detail::make_engine(seed);
    detail::ComplexGaussian unit(1.0);
    ComplexMatrix bartlett = ComplexMatrix::Zero(m, m);
    for (Eigen::Index i = 0; i < m; ++i) {
        std::gamma_distribution<double> gamma(static_cast<double>(snapshots - i), 1.0);
        bartlett(i, i) = std::sqrt(gamma(engine));
        for (Eigen::Index j = 0; j < i; ++j)
            bartlett(i, j) = unit(engine);
    }

    // x_l = [sqrt(inr) v1 | I] z_l with z_l ~ CN(0, I_m); row 0 of A has a
    // single nonzero entry.
    ComplexMatrix factor = bartlett.bottomRows(n);
    factor.col(0) += std::sqrt(inr) * bartlett(0, 0) * v1.elements();
    return CovarianceMatrix(scaled_gram(factor, 1.0 / static_cast<double>(snapshots)),
                            CovarianceKind::sample);
}

CovarianceMatrix diagonal_load(const CovarianceMatrix &scm, double delta) {
    if (!(delta >= 0.0) || !std::isfinite(delta))
        throw Error(ErrorCode::invalid_parameter,
                    "diagonal loading must be finite and non-negative, got " + std::to_string(delta));
    ComplexMatrix loaded = scm.entries();
    loaded.diagonal().array() += delta;
    CovarianceMatrix out(std::move(loaded), CovarianceKind::loaded);
    out.loading_ = scm.loading() + delta;
    return out;
}

EigenSystem eigensystem(const CovarianceMatrix &cov) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(cov.entries());
    if (solver.info() != Eigen::Success)
        throw Error(ErrorCode::invalid_input, "Hermitian eigensolver did not converge");
    EigenSystem out;
    out.eigenvalues = solver.eigenvalues().reverse();
    out.eigenvectors = solver.eigenvectors().rowwise().reverse();
    return out;
}

ComplexVector solve_hpd(const CovarianceMatrix &cov, const ComplexVector &rhs) {
    if (rhs.size() != cov.size())
        throw Error(ErrorCode::dimension, "right-hand side length does not match matrix size");
    Eigen::LLT<ComplexMatrix> llt(cov.entries());
    if (llt.info() != Eigen::Success || !(llt.rcond() > 1e-12))
        throw Error(ErrorCode::singular_matrix,
                    "covariance is not numerically positive definite; apply diagonal loading");
    return llt.solve(rhs);
}

} // namespace notchdepth
