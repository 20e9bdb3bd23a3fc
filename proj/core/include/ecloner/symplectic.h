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

#ifndef ECLONER_SYMPLECTIC_H_
#define ECLONER_SYMPLECTIC_H_

#include <span>
#include <vector>

#include "ecloner/gaussian_state.h"

namespace ecloner {

/**
 * A linear phase-space map S acting on an ordered subset of modes.
 *
 * `matrix` is 2m x 2m in the (x, p) block ordering of the listed modes and
 * must satisfy SᵀΩS = Ω. Construction throws std::invalid_argument otherwise.
 */
class SymplecticOp {
   public:
    SymplecticOp(Matrix matrix, std::vector<int> modes);

    const Matrix& matrix() const { return matrix_; }
    std::span<const int> modes() const { return modes_; }

    /// The full 2n x 2n matrix, identity on untouched modes.
    Matrix embedded(int num_modes) const;

   private:
    Matrix matrix_;
    std::vector<int> modes_;
};

/// ‖SᵀΩS − Ω‖_∞ (max-abs entry).
double symplectic_defect(const Matrix& s);

/// Lossless beamsplitter with intensity transmittance t:
/// a' = √t·a + √(1−t)·b, b' = √(1−t)·a − √t·b on both quadratures.
SymplecticOp beamsplitter(double transmittance, int mode_a, int mode_b);

/// diag(s, 1/s) on the (x, p) block of `mode`.
SymplecticOp squeeze_gate(double s, int mode);

/// x' = cos θ·x − sin θ·p, p' = sin θ·x + cos θ·p.
SymplecticOp phase_rotation(double theta, int mode);

/**
 * Homodyne feedforward written as a controlled displacement.
 *
 * x_target += gain_x·x_(x_source), p_target += gain_p·p_(p_source). The
 * conjugate quadratures of the source modes pick up the back-action that
 * keeps the map symplectic; sources are expected to be discarded afterwards,
 * which matches measuring them and displacing by the classical record.
 */
SymplecticOp feedforward(double gain_x, double gain_p, int x_source, int p_source, int target);

GaussianState apply(const SymplecticOp& op, const GaussianState& state);

}  // namespace ecloner

#endif  // ECLONER_SYMPLECTIC_H_
