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

#include "ecloner/gaussian_state.h"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "ecloner/errors.h"

namespace ecloner {

namespace {

void require_mode(const GaussianState& state, int mode, const char* what) {
    if (mode < 0 || mode >= state.num_modes()) {
        throw std::invalid_argument(std::string(what) + ": mode index " + std::to_string(mode) +
                                    " out of range for " + std::to_string(state.num_modes()) +
                                    "-mode state");
    }
}

}  // namespace

Matrix symplectic_form(int num_modes) {
    Matrix omega = Matrix::Zero(2 * num_modes, 2 * num_modes);
    for (int k = 0; k < num_modes; ++k) {
        omega(2 * k, 2 * k + 1) = 1.0;
        omega(2 * k + 1, 2 * k) = -1.0;
    }
    return omega;
}

double spectral_tolerance(const Matrix& cov) {
    // Rounding in a stored covariance moves ν by about eps·cond(cov).
    Eigen::SelfAdjointEigenSolver<Matrix> solver(cov, Eigen::EigenvaluesOnly);
    const Vector ev = solver.eigenvalues();
    const double cond = ev(0) > 0.0 ? ev(ev.size() - 1) / ev(0) : 0.0;
    return kSpectralTolerance + 64.0 * std::numeric_limits<double>::epsilon() * cond;
}

Vector symplectic_eigenvalues(const Matrix& cov) {
    if (cov.rows() != cov.cols() || cov.rows() % 2 != 0 || cov.rows() == 0) {
        throw std::invalid_argument("symplectic_eigenvalues: covariance must be 2n x 2n");
    }
    const int n = static_cast<int>(cov.rows() / 2);
    Eigen::LLT<Matrix> llt(0.5 * (cov + cov.transpose()));
    if (llt.info() != Eigen::Success) {
        throw UncertaintyViolation("covariance matrix is not positive definite");
    }
    // K = L^T Ω L is antisymmetric and similar to Ω V; iK is Hermitian with
    // eigenvalues ±ν.
    const Matrix lower = llt.matrixL();
    const Matrix twisted = lower.transpose() * symplectic_form(n) * lower;
    const Eigen::MatrixXcd hermitian = std::complex<double>(0.0, 1.0) * twisted.cast<std::complex<double>>();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitian, Eigen::EigenvaluesOnly);
    const Vector all = solver.eigenvalues();  // ascending: -ν_max ... ν_max
    Vector nu(n);
    for (int k = 0; k < n; ++k) {
        nu(k) = 0.5 * (all(n + k) - all(n - 1 - k));
    }
    return nu;
}

GaussianState::GaussianState(Vector mean, Matrix cov) : mean_(std::move(mean)), cov_(std::move(cov)) {
    const auto dim = mean_.size();
    if (dim == 0 || dim % 2 != 0) {
        throw std::invalid_argument("GaussianState: mean length must be a positive even number");
    }
    if (cov_.rows() != dim || cov_.cols() != dim) {
        throw std::invalid_argument("GaussianState: covariance shape does not match mean length");
    }
    if (!mean_.allFinite() || !cov_.allFinite()) {
        throw std::invalid_argument("GaussianState: non-finite moments");
    }
    const double scale = std::max(1.0, cov_.cwiseAbs().maxCoeff());
    if ((cov_ - cov_.transpose()).cwiseAbs().maxCoeff() > kAlgebraicTolerance * scale) {
        throw std::invalid_argument("GaussianState: covariance matrix is not symmetric");
    }
    cov_ = 0.5 * (cov_ + cov_.transpose());
    const Vector nu = ecloner::symplectic_eigenvalues(cov_);
    if (nu.minCoeff() < 1.0 - spectral_tolerance(cov_)) {
        throw UncertaintyViolation("GaussianState: smallest symplectic eigenvalue " +
                                   std::to_string(nu.minCoeff()) + " is below 1");
    }
}

Eigen::Matrix2d GaussianState::mode_cov(int mode) const {
    return cross_cov(mode, mode);
}

Eigen::Matrix2d GaussianState::cross_cov(int row_mode, int col_mode) const {
    require_mode(*this, row_mode, "cross_cov");
    require_mode(*this, col_mode, "cross_cov");
    return cov_.block<2, 2>(2 * row_mode, 2 * col_mode);
}

Vector GaussianState::symplectic_eigenvalues() const {
    return ecloner::symplectic_eigenvalues(cov_);
}

bool GaussianState::is_pure() const {
    return is_pure(spectral_tolerance(cov_));
}

bool GaussianState::is_pure(double tolerance) const {
    return (symplectic_eigenvalues().array() - 1.0).abs().maxCoeff() <= tolerance;
}

GaussianState vacuum(int num_modes) {
    if (num_modes < 1) {
        throw std::invalid_argument("vacuum: need at least one mode");
    }
    return GaussianState(Vector::Zero(2 * num_modes), Matrix::Identity(2 * num_modes, 2 * num_modes));
}

GaussianState squeezed_vacuum(double v_plus, double v_minus) {
    if (!(v_plus > 0.0) || !(v_minus > 0.0) || !std::isfinite(v_plus) || !std::isfinite(v_minus)) {
        throw std::invalid_argument("squeezed_vacuum: variances must be positive and finite");
    }
    if (v_plus * v_minus < 1.0 - kSpectralTolerance) {
        throw UncertaintyViolation("squeezed_vacuum: variance product below 1");
    }
    Matrix cov = Matrix::Zero(2, 2);
    cov(0, 0) = v_plus;
    cov(1, 1) = v_minus;
    return GaussianState(Vector::Zero(2), std::move(cov));
}

GaussianState thermal(double variance) {
    if (!std::isfinite(variance) || variance < 1.0 - kSpectralTolerance) {
        throw std::invalid_argument("thermal: variance must be finite and at least 1");
    }
    return GaussianState(Vector::Zero(2), variance * Matrix::Identity(2, 2));
}

GaussianState tensor(const GaussianState& a, const GaussianState& b) {
    const auto da = a.mean().size();
    const auto db = b.mean().size();
    Vector mean(da + db);
    mean << a.mean(), b.mean();
    Matrix cov = Matrix::Zero(da + db, da + db);
    cov.topLeftCorner(da, da) = a.cov();
    cov.bottomRightCorner(db, db) = b.cov();
    return GaussianState(std::move(mean), std::move(cov));
}

GaussianState displace(const GaussianState& state, const Vector& delta) {
    if (delta.size() != state.mean().size()) {
        throw std::invalid_argument("displace: displacement length does not match 2n");
    }
    return GaussianState(state.mean() + delta, state.cov());
}

GaussianState append_vacuum(const GaussianState& state, int count) {
    if (count < 0) {
        throw std::invalid_argument("append_vacuum: negative count");
    }
    if (count == 0) {
        return state;
    }
    return tensor(state, vacuum(count));
}

GaussianState select_modes(const GaussianState& state, std::span<const int> order) {
    if (order.empty()) {
        throw std::invalid_argument("select_modes: empty selection");
    }
    std::vector<int> seen;
    for (int m : order) {
        require_mode(state, m, "select_modes");
        if (std::find(seen.begin(), seen.end(), m) != seen.end()) {
            throw std::invalid_argument("select_modes: duplicate mode index");
        }
        seen.push_back(m);
    }
    const auto k = static_cast<Eigen::Index>(order.size());
    Vector mean(2 * k);
    Matrix cov(2 * k, 2 * k);
    for (Eigen::Index i = 0; i < k; ++i) {
        mean.segment<2>(2 * i) = state.mean().segment<2>(2 * order[i]);
        for (Eigen::Index j = 0; j < k; ++j) {
            cov.block<2, 2>(2 * i, 2 * j) = state.cov().block<2, 2>(2 * order[i], 2 * order[j]);
        }
    }
    return GaussianState(std::move(mean), std::move(cov));
}

GaussianState discard_modes(const GaussianState& state, std::span<const int> indices) {
    std::vector<bool> drop(state.num_modes(), false);
    for (int m : indices) {
        require_mode(state, m, "discard_modes");
        if (drop[m]) {
            throw std::invalid_argument("discard_modes: duplicate mode index");
        }
        drop[m] = true;
    }
    std::vector<int> keep;
    for (int m = 0; m < state.num_modes(); ++m) {
        if (!drop[m]) {
            keep.push_back(m);
        }
    }
    if (keep.empty()) {
        throw std::invalid_argument("discard_modes: cannot discard every mode");
    }
    return select_modes(state, keep);
}

}  // namespace ecloner
