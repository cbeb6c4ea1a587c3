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

#include "notchdepth/array_model.hpp"

#include <cstdint>

namespace notchdepth {

enum class CovarianceKind { ensemble, sample, loaded };

/// N x N Hermitian positive semidefinite matrix. Construction checks the
/// Hermitian property; semidefiniteness is the caller's contract.
class CovarianceMatrix {
  public:
    CovarianceMatrix(ComplexMatrix entries, CovarianceKind kind);

    const ComplexMatrix &entries() const noexcept { return entries_; }
    CovarianceKind kind() const noexcept { return kind_; }
    Eigen::Index size() const noexcept { return entries_.rows(); }

    /// Diagonal loading applied so far (zero unless kind() == loaded).
    double loading() const noexcept { return loading_; }

  private:
    friend CovarianceMatrix diagonal_load(const CovarianceMatrix &, double);

    ComplexMatrix entries_;
    CovarianceKind kind_;
    double loading_ = 0.0;
};

/// Eigenvalues sorted descending; column i of `eigenvectors` pairs with
/// eigenvalues(i).
struct EigenSystem {
    Eigen::VectorXd eigenvalues;
    ComplexMatrix eigenvectors;
};

/// Columns are snapshots x_l = a_l v1 + n_l.
struct SnapshotBatch {
    ComplexMatrix data;
    std::uint64_t seed = 0;
    double inr = 0.0;
    double interferer_u = 0.0;

    Eigen::Index snapshots() const noexcept { return data.cols(); }
};

/// sigma^2 v1 v1^H + I
CovarianceMatrix ensemble_cov(const SteeringVector &v1, double inr);

/// Draws L snapshots with a_l ~ CN(0, inr) and n_l ~ CN(0, I). CN(0, s)
/// has independent real and imaginary parts of variance s/2. Output is a
/// pure function of (v1, inr, L, seed).
SnapshotBatch generate_snapshots(const SteeringVector &v1, double inr, Eigen::Index snapshots,
                                 std::uint64_t seed);

/// (1/L) sum_l x_l x_l^H, symmetrized after accumulation.
CovarianceMatrix sample_cov(const SnapshotBatch &batch);

/// Draws an SCM with the same distribution as sample_cov(generate_snapshots(...))
/// from a complex Wishart variate of the stacked vector [a_l; n_l] (Bartlett
/// decomposition), at O(N^3) cost independent of L. Requires L > N.
/// The random stream differs from the snapshot path, so the two are
/// equal in distribution only.
CovarianceMatrix sample_cov_wishart(const SteeringVector &v1, double inr, Eigen::Index snapshots,
                                    std::uint64_t seed);

/// S + delta I. delta == 0 is accepted; a rank-deficient result then fails
/// at solve time.
CovarianceMatrix diagonal_load(const CovarianceMatrix &scm, double delta);

EigenSystem eigensystem(const CovarianceMatrix &cov);

/// Solves cov y = rhs with a Cholesky factorization. Throws
/// ErrorCode::singular_matrix when cov is not numerically positive definite.
ComplexVector solve_hpd(const CovarianceMatrix &cov, const ComplexVector &rhs);

} // namespace notchdepth
