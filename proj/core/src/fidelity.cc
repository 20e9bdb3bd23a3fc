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

#include "ecloner/fidelity.h"

#include <cmath>
#include <numeric>
#include <vector>

#include "ecloner/errors.h"

namespace ecloner {

namespace {

void require_squeezing(double v_s) {
    if (!(v_s > 0.0 && v_s <= 1.0)) {
        throw std::invalid_argument("fidelity: v_s must lie in (0, 1]");
    }
}

}  // namespace

FidelityResult pure_mixed_fidelity(const GaussianState& reference, const GaussianState& candidate,
                                   std::span<const int> mode_map) {
    if (!reference.is_pure()) {
        throw std::invalid_argument("pure_mixed_fidelity: reference state is not pure");
    }
    const int n = reference.num_modes();
    std::vector<int> identity;
    if (mode_map.empty()) {
        if (candidate.num_modes() != n) {
            throw std::invalid_argument("pure_mixed_fidelity: mode counts differ and no mode map given");
        }
        identity.resize(n);
        std::iota(identity.begin(), identity.end(), 0);
        mode_map = identity;
    } else if (static_cast<int>(mode_map.size()) != n) {
        throw std::invalid_argument("pure_mixed_fidelity: mode map must name one mode per reference mode");
    }
    const GaussianState mapped = select_modes(candidate, mode_map);

    const Matrix joint = reference.cov() + mapped.cov();
    const Eigen::LDLT<Matrix> ldlt(joint);
    const double joint_det = joint.determinant();
    if (ldlt.info() != Eigen::Success || !(joint_det > 0.0) || !ldlt.isPositive()) {
        throw DegenerateInput("pure_mixed_fidelity: A + B is singular");
    }
    const Vector delta = reference.mean() - mapped.mean();
    const double quad = delta.dot(ldlt.solve(delta));
    const double value = std::pow(2.0, n) / std::sqrt(joint_det) * std::exp(-0.5 * quad);
    return {value, reference.cov().determinant(), joint_det};
}

double local_fidelity(double v_s) {
    require_squeezing(v_s);
    return 4.0 * v_s / ((v_s + 2.0) * (2.0 * v_s + 1.0));
}

double global_fidelity(double v_s) {
    require_squeezing(v_s);
    return 4.0 / 9.0;
}

}  // namespace ecloner
