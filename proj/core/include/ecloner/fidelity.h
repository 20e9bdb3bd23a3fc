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

#ifndef ECLONER_FIDELITY_H_
#define ECLONER_FIDELITY_H_

#include <span>

#include "ecloner/gaussian_state.h"

namespace ecloner {

struct FidelityResult {
    double value;
    double reference_cov_det;
    double joint_det;  // det(A + B)
};

/**
 * Overlap <ψ|ρ|ψ> of a pure Gaussian reference with a Gaussian candidate.
 *
 * F = 2^n det(A + B)^(-1/2) exp(-½ δᵀ (A + B)⁻¹ δ) with A, B the covariances
 * (vacuum variance 1) and δ the mean difference. `mode_map[i]` names the
 * candidate mode compared against reference mode i; an empty map means the
 * identity and requires equal mode counts.
 *
 * Throws std::invalid_argument for a mixed reference or mismatched modes and
 * DegenerateInput when A + B is singular.
 */
FidelityResult pure_mixed_fidelity(const GaussianState& reference, const GaussianState& candidate,
                                   std::span<const int> mode_map = {});

/// 4 v_s / ((v_s + 2)(2 v_s + 1)), for v_s in (0, 1].
double local_fidelity(double v_s);
/// 4/9, for v_s in (0, 1].
double global_fidelity(double v_s);

}  // namespace ecloner

#endif  // ECLONER_FIDELITY_H_
