// Copyright 2026 The ecloner Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ECLONER_GAUSSIAN_STATE_H_
#define ECLONER_GAUSSIAN_STATE_H_

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace ecloner {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Tolerance for algebraic identities (symmetry, symplecticity).
inline constexpr double kAlgebraicTolerance = 1e-12;
/// Tolerance for spectral checks (uncertainty principle, purity).
inline constexpr double kSpectralTolerance = 1e-9;

/// Block-diagonal symplectic form with 2x2 blocks [[0, 1], [-1, 0]].
Matrix symplectic_form(int num_modes);

/// Spectral tolerance for `cov`: kSpectralTolerance plus a rounding allowance
/// proportional to its condition number (matters only for strong squeezing).
double spectral_tolerance(const Matrix& cov);

/// Symplectic eigenvalues of a 2n x 2n covariance matrix, sorted ascending.
Vector symplectic_eigenvalues(const Matrix& cov);

/**
 * An n-mode Gaussian state described by its first and second moments.
 *
 * Quadratures are ordered (x1, p1, ..., xn, pn) and normalized so that the
 * vacuum has unit variance, i.e. [x, p] = 2i. The constructor rejects
 * asymmetric matrices (std::invalid_argument) and matrices that violate the
 * uncertainty principle (UncertaintyViolation). Instances are immutable.
 */
class GaussianState {
   public:
    GaussianState(Vector mean, Matrix cov);

    int num_modes() const { return static_cast<int>(mean_.size() / 2); }
    const Vector& mean() const { return mean_; }
    const Matrix& cov() const { return cov_; }

    /// 2x2 covariance block of one mode.
    Eigen::Matrix2d mode_cov(int mode) const;
    /// 2x2 cross-covariance block between two modes.
    Eigen::Matrix2d cross_cov(int row_mode, int col_mode) const;

    Vector symplectic_eigenvalues() const;
    bool is_pure() const;  // at spectral_tolerance(cov())
    bool is_pure(double tolerance) const;

   private:
    Vector mean_;
    Matrix cov_;
};

GaussianState vacuum(int num_modes);
GaussianState squeezed_vacuum(double v_plus, double v_minus);
/// Single-mode thermal state with equal quadrature variance `variance` >= 1.
GaussianState thermal(double variance);

/// Tensor product; modes of `b` follow those of `a`.
GaussianState tensor(const GaussianState& a, const GaussianState& b);

GaussianState displace(const GaussianState& state, const Vector& delta);
GaussianState append_vacuum(const GaussianState& state, int count);

/// Gaussian partial trace over `indices` (order irrelevant, duplicates rejected).
GaussianState discard_modes(const GaussianState& state, std::span<const int> indices);
/// Reduced state on `order`, with modes laid out in the given order.
GaussianState select_modes(const GaussianState& state, std::span<const int> order);

}  // namespace ecloner

#endif  // ECLONER_GAUSSIAN_STATE_H_
