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

#include "ecloner/criteria.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "ecloner/errors.h"

namespace ecloner {

namespace {

int index_of(Quadrature q, Party p) {
    return 2 * static_cast<int>(p) + static_cast<int>(q);
}

double conditional_variance(const CorrelationMatrix& cm, Quadrature q) {
    const double yy = cm(q, q, Party::kY, Party::kY);
    if (!(yy > 0.0)) {
        throw DegenerateInput("epr_paradox: conditioning variance must be positive");
    }
    const double xy = cm(q, q, Party::kX, Party::kY);
    return cm(q, q, Party::kX, Party::kX) - xy * xy / yy;
}

}  // namespace

CorrelationMatrix::CorrelationMatrix(const Eigen::Matrix4d& entries) : entries_(entries) {
    if (!entries_.allFinite()) {
        throw std::invalid_argument("CorrelationMatrix: non-finite entries");
    }
    const double scale = std::max(1.0, entries_.cwiseAbs().maxCoeff());
    if ((entries_ - entries_.transpose()).cwiseAbs().maxCoeff() > kAlgebraicTolerance * scale) {
        throw std::invalid_argument("CorrelationMatrix: entries are not symmetric");
    }
    if (entries_.diagonal().minCoeff() < 0.0) {
        throw std::invalid_argument("CorrelationMatrix: negative variance on the diagonal");
    }
}

double CorrelationMatrix::operator()(Quadrature k, Quadrature l, Party m, Party n) const {
    return entries_(index_of(k, m), index_of(l, n));
}

CorrelationMatrix CorrelationMatrix::swapped() const {
    Eigen::Matrix4d p = Eigen::Matrix4d::Zero();
    p.block<2, 2>(0, 2).setIdentity();
    p.block<2, 2>(2, 0).setIdentity();
    return CorrelationMatrix(p * entries_ * p.transpose());
}

CorrelationMatrix correlation_matrix(const Matrix& cov, int mode_x, int mode_y) {
    const int n = static_cast<int>(cov.rows() / 2);
    if (cov.rows() != cov.cols() || cov.rows() % 2 != 0) {
        throw std::invalid_argument("correlation_matrix: covariance must be 2n x 2n");
    }
    if (mode_x == mode_y) {
        throw std::invalid_argument("correlation_matrix: modes must be distinct");
    }
    if (mode_x < 0 || mode_y < 0 || mode_x >= n || mode_y >= n) {
        throw std::invalid_argument("correlation_matrix: mode index out of range");
    }
    Eigen::Matrix4d c;
    const int modes[] = {mode_x, mode_y};
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            c.block<2, 2>(2 * i, 2 * j) = cov.block<2, 2>(2 * modes[i], 2 * modes[j]);
        }
    }
    return CorrelationMatrix(c);
}

CorrelationMatrix correlation_matrix(const GaussianState& state, int mode_x, int mode_y) {
    return correlation_matrix(state.cov(), mode_x, mode_y);
}

double inseparability(const CorrelationMatrix& cm) {
    auto measurable = [&](Quadrature q) {
        return cm(q, q, Party::kX, Party::kX) + cm(q, q, Party::kY, Party::kY) -
               2.0 * std::abs(cm(q, q, Party::kX, Party::kY));
    };
    const double plus = measurable(Quadrature::kAmplitude);
    const double minus = measurable(Quadrature::kPhase);
    const double radicand = plus * minus;
    if (!(radicand >= 0.0) || plus < 0.0 || minus < 0.0) {
        throw InternalConsistencyError("inseparability: negative radicand " + std::to_string(radicand));
    }
    return 0.5 * std::sqrt(radicand);
}

double epr_paradox(const CorrelationMatrix& cm, EprDirection direction) {
    const double directed =
        conditional_variance(cm, Quadrature::kAmplitude) * conditional_variance(cm, Quadrature::kPhase);
    if (direction == EprDirection::kXGivenY) {
        return directed;
    }
    return std::min(directed, epr_paradox(cm.swapped(), EprDirection::kXGivenY));
}

double squeezing_db(double v_s) {
    if (!(v_s > 0.0)) {
        throw std::invalid_argument("squeezing_db: v_s must be positive");
    }
    return -10.0 * std::log10(v_s) + 0.0;  // +0.0 turns -0 into 0 at v_s = 1
}

}  // namespace ecloner
