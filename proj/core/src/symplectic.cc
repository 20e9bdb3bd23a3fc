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

#include "ecloner/symplectic.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace ecloner {

double symplectic_defect(const Matrix& s) {
    const Matrix omega = symplectic_form(static_cast<int>(s.rows() / 2));
    return (s.transpose() * omega * s - omega).cwiseAbs().maxCoeff();
}

SymplecticOp::SymplecticOp(Matrix matrix, std::vector<int> modes)
    : matrix_(std::move(matrix)), modes_(std::move(modes)) {
    const auto dim = static_cast<Eigen::Index>(2 * modes_.size());
    if (modes_.empty() || matrix_.rows() != dim || matrix_.cols() != dim) {
        throw std::invalid_argument("SymplecticOp: matrix must be 2m x 2m for m listed modes");
    }
    for (std::size_t i = 0; i < modes_.size(); ++i) {
        if (modes_[i] < 0) {
            throw std::invalid_argument("SymplecticOp: negative mode index");
        }
        if (std::find(modes_.begin() + static_cast<std::ptrdiff_t>(i) + 1, modes_.end(), modes_[i]) !=
            modes_.end()) {
            throw std::invalid_argument("SymplecticOp: duplicate mode index");
        }
    }
    if (!matrix_.allFinite()) {
        throw std::invalid_argument("SymplecticOp: non-finite matrix");
    }
    // Entries of magnitude s and 1/s multiply, so scale the tolerance by ‖S‖².
    const double scale = std::max(1.0, matrix_.cwiseAbs().maxCoeff());
    if (symplectic_defect(matrix_) > kAlgebraicTolerance * scale * scale) {
        throw std::invalid_argument("SymplecticOp: matrix is not symplectic");
    }
}

Matrix SymplecticOp::embedded(int num_modes) const {
    for (int m : modes_) {
        if (m >= num_modes) {
            throw std::invalid_argument("SymplecticOp: mode index " + std::to_string(m) +
                                        " out of range for " + std::to_string(num_modes) +
                                        "-mode state");
        }
    }
    Matrix full = Matrix::Identity(2 * num_modes, 2 * num_modes);
    const auto m = static_cast<Eigen::Index>(modes_.size());
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < m; ++j) {
            full.block<2, 2>(2 * modes_[i], 2 * modes_[j]) = matrix_.block<2, 2>(2 * i, 2 * j);
        }
    }
    return full;
}

SymplecticOp beamsplitter(double transmittance, int mode_a, int mode_b) {
    if (!(transmittance >= 0.0 && transmittance <= 1.0)) {
        throw std::invalid_argument("beamsplitter: transmittance must lie in [0, 1]");
    }
    if (mode_a == mode_b) {
        throw std::invalid_argument("beamsplitter: modes must be distinct");
    }
    const double t = std::sqrt(transmittance);
    const double r = std::sqrt(1.0 - transmittance);
    Matrix s = Matrix::Zero(4, 4);
    for (int q = 0; q < 2; ++q) {
        s(q, q) = t;
        s(q, 2 + q) = r;
        s(2 + q, q) = r;
        s(2 + q, 2 + q) = -t;
    }
    return SymplecticOp(std::move(s), {mode_a, mode_b});
}

SymplecticOp squeeze_gate(double s, int mode) {
    if (!(s > 0.0) || !std::isfinite(s)) {
        throw std::invalid_argument("squeeze_gate: factor must be positive and finite");
    }
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = s;
    m(1, 1) = 1.0 / s;
    return SymplecticOp(std::move(m), {mode});
}

SymplecticOp phase_rotation(double theta, int mode) {
    Matrix m(2, 2);
    m << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    return SymplecticOp(std::move(m), {mode});
}

SymplecticOp feedforward(double gain_x, double gain_p, int x_source, int p_source, int target) {
    if (!std::isfinite(gain_x) || !std::isfinite(gain_p)) {
        throw std::invalid_argument("feedforward: gains must be finite");
    }
    if (target == x_source || target == p_source) {
        throw std::invalid_argument("feedforward: target must differ from the measured modes");
    }
    std::vector<int> modes{target, x_source};
    if (p_source != x_source) {
        modes.push_back(p_source);
    }
    const auto dim = static_cast<Eigen::Index>(2 * modes.size());
    const Eigen::Index t = 0;
    const Eigen::Index a = 2;
    const Eigen::Index b = (p_source == x_source) ? 2 : 4;

    // x_t += g_x x_a, back-action p_a -= g_x p_t.
    Matrix shift_x = Matrix::Identity(dim, dim);
    shift_x(t, a) = gain_x;
    shift_x(a + 1, t + 1) = -gain_x;
    // p_t += g_p p_b, back-action x_b -= g_p x_t.
    Matrix shift_p = Matrix::Identity(dim, dim);
    shift_p(t + 1, b + 1) = gain_p;
    shift_p(b, t) = -gain_p;

    return SymplecticOp(shift_p * shift_x, std::move(modes));
}

GaussianState apply(const SymplecticOp& op, const GaussianState& state) {
    const Matrix s = op.embedded(state.num_modes());
    Matrix cov = s * state.cov() * s.transpose();
    cov = 0.5 * (cov + cov.transpose());
    return GaussianState(s * state.mean(), std::move(cov));
}

}  // namespace ecloner
