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

#ifndef ECLONER_CRITERIA_H_
#define ECLONER_CRITERIA_H_

#include <Eigen/Dense>

#include "ecloner/gaussian_state.h"

namespace ecloner {

enum class Quadrature { kAmplitude = 0, kPhase = 1 };  // X+ and X-
enum class Party { kX = 0, kY = 1 };

/**
 * Symmetrized, mean-subtracted second moments of a mode pair (x, y),
 * C^{kl}_{mn} = ½<X^k_m X^l_n + X^l_n X^k_m> − <X^k_m><X^l_n>.
 *
 * Stored as a 4x4 matrix ordered (X+_x, X-_x, X+_y, X-_y). Can be built from
 * an analytic state or from a sampled covariance, so both routes feed the
 * same criteria code.
 */
class CorrelationMatrix {
   public:
    explicit CorrelationMatrix(const Eigen::Matrix4d& entries);

    double operator()(Quadrature k, Quadrature l, Party m, Party n) const;
    const Eigen::Matrix4d& matrix() const { return entries_; }

    /// Same moments with the roles of x and y exchanged.
    CorrelationMatrix swapped() const;

   private:
    Eigen::Matrix4d entries_;
};

CorrelationMatrix correlation_matrix(const GaussianState& state, int mode_x, int mode_y);
/// From a full 2n x 2n covariance (e.g. a Monte-Carlo estimate).
CorrelationMatrix correlation_matrix(const Matrix& cov, int mode_x, int mode_y);

/// Product-form inseparability ½√(C+_I C-_I); below 1 certifies entanglement.
double inseparability(const CorrelationMatrix& cm);

enum class EprDirection {
    kXGivenY,         // infer x from y
    kSymmetrizedMin,  // min over both conditioning directions
};

/// Product of conditional variances; below 1 signals EPR-type correlations.
double epr_paradox(const CorrelationMatrix& cm, EprDirection direction = EprDirection::kXGivenY);

/// -10 log10(v_s).
double squeezing_db(double v_s);

}  // namespace ecloner

#endif  // ECLONER_CRITERIA_H_
