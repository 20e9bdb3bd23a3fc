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

#ifndef ECLONER_CLONING_CIRCUITS_H_
#define ECLONER_CLONING_CIRCUITS_H_

#include <array>
#include <numbers>
#include <string_view>
#include <utility>

#include "ecloner/gaussian_state.h"

namespace ecloner {

enum class Machine { kLocal, kGlobal };

std::string_view to_string(Machine machine);

/// Feedforward gains (g+, g-) of a linear cloner. The default is unity gain.
struct CloneGain {
    double x = std::numbers::sqrt2;
    double p = std::numbers::sqrt2;

    static CloneGain uniform(double g) { return {g, g}; }
};

using ModePair = std::pair<int, int>;

/// Two-mode EPR state from orthogonally squeezed beams (variances v_s and
/// 1/v_s) interfered on a 50/50 beamsplitter. Requires 0 < v_s <= 1.
GaussianState epr_source(double v_s);

/**
 * Beamsplitter + dual-homodyne + feedforward cloner applied to `mode`.
 *
 * Three vacuum ancillas are appended, the circuit is run, and the two
 * measured ancillas are traced out. Clone A replaces `mode`; clone B is
 * appended as the last mode of the returned state.
 */
GaussianState linear_cloner(const GaussianState& state, int mode, CloneGain gain = {});

/// Signal transfer and input-referred added noise of one linear-cloner clone.
struct CloneNoise {
    double transfer_x;      // <x_clone> / <x_in>
    double transfer_p;
    double added_noise_x;   // (V_clone - T² V_in) / T², independent of V_in
    double added_noise_p;
};

CloneNoise linear_cloner_noise(CloneGain gain);

/**
 * The four output modes of an e-cloner together with the clone pairing.
 *
 * Modes are held in the order (epr1A, epr1B, epr2A, epr2B), named as in the
 * Heisenberg derivation of each machine. The pairing is fixed per machine:
 *   local:  clone 1 = (epr1A, epr2B), clone 2 = (epr1B, epr2A)
 *   global: clone 1 = (epr1A, epr1B), clone 2 = (epr2A, epr2B)
 * and the constructor rejects anything else.
 */
class CloneSet {
   public:
    static constexpr std::array<std::string_view, 4> kModeLabels = {"epr1A", "epr1B", "epr2A", "epr2B"};

    CloneSet(GaussianState state, ModePair clone1, ModePair clone2, Machine machine, double v_s);

    const GaussianState& state() const { return state_; }
    ModePair clone1() const { return clone1_; }
    ModePair clone2() const { return clone2_; }
    Machine machine() const { return machine_; }
    double v_s() const { return v_s_; }

    ModePair clone_pair(int which) const;
    /// Reduced two-mode state of clone 1 or 2, ordered (arm 1, arm 2).
    GaussianState clone(int which) const;
    /// Covariance with modes reordered as (clone1 arm1, clone1 arm2, clone2 arm1, clone2 arm2).
    Matrix canonical_cov() const;

    static ModePair expected_clone1(Machine machine);
    static ModePair expected_clone2(Machine machine);

   private:
    GaussianState state_;
    ModePair clone1_;
    ModePair clone2_;
    Machine machine_;
    double v_s_;
};

/// Independent linear cloners on each arm of a two-mode state.
CloneSet local_ecloner(const GaussianState& epr, CloneGain gain = {});

/// Disentangle, un-squeeze, clone, re-squeeze, re-entangle. `v_s` is the
/// squeezing the input was prepared with.
CloneSet global_ecloner(const GaussianState& epr, double v_s, CloneGain gain = {});

CloneSet run_machine(Machine machine, double v_s, CloneGain gain = {});

}  // namespace ecloner

#endif  // ECLONER_CLONING_CIRCUITS_H_
