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

#include "ecloner/cloning_circuits.h"

#include <cmath>
#include <string>

#include "ecloner/symplectic.h"

namespace ecloner {

namespace {

void require_squeezing(double v_s, const char* what) {
    if (!(v_s > 0.0 && v_s <= 1.0)) {
        throw std::invalid_argument(std::string(what) + ": v_s must lie in (0, 1]");
    }
}

void require_two_modes(const GaussianState& epr, const char* what) {
    if (epr.num_modes() != 2) {
        throw std::invalid_argument(std::string(what) + ": input must be a two-mode state");
    }
}

// Squeezing of an EPR state whose arm-1 amplitude variance is (v + 1/v)/2.
double squeezing_from_arm_variance(double arm_variance) {
    const double a = std::max(arm_variance, 1.0);
    return a - std::sqrt(a * a - 1.0);
}

}  // namespace

std::string_view to_string(Machine machine) {
    return machine == Machine::kLocal ? "local" : "global";
}

GaussianState epr_source(double v_s) {
    require_squeezing(v_s, "epr_source");
    // Second beam is the π/2-rotated copy: amplitude variance 1/v_s.
    const GaussianState beams = tensor(squeezed_vacuum(v_s, 1.0 / v_s), squeezed_vacuum(1.0 / v_s, v_s));
    return apply(beamsplitter(0.5, 0, 1), beams);
}

GaussianState linear_cloner(const GaussianState& state, int mode, CloneGain gain) {
    if (mode < 0 || mode >= state.num_modes()) {
        throw std::invalid_argument("linear_cloner: mode index out of range");
    }
    const int n = state.num_modes();
    const int tap = n;        // N1 in; carries X2 = (X - N1)/√2 after the first split
    const int p_port = n + 1;  // N2 in; after the second split, p is read here
    const int ancilla = n + 2;  // N3, mixed in at the output splitter
    // After the second split: x_(p_port) = (X2 - N2)/√2, p_(tap) = (X2 + N2)/√2.
    const int x_read = p_port;
    const int p_read = tap;

    GaussianState s = append_vacuum(state, 3);
    s = apply(beamsplitter(0.5, mode, tap), s);   // mode: X3 = (X + N1)/√2
    s = apply(beamsplitter(0.5, tap, p_port), s);
    s = apply(feedforward(gain.x, gain.p, x_read, p_read, mode), s);  // X5 = X3 + g X4
    s = apply(beamsplitter(0.5, mode, ancilla), s);  // clone A at mode, clone B at ancilla
    const int measured[] = {tap, p_port};
    return discard_modes(s, measured);
}

CloneNoise linear_cloner_noise(CloneGain gain) {
    Vector probe(2);
    probe << 1.0, 1.0;
    const GaussianState out = linear_cloner(displace(vacuum(1), probe), 0, gain);
    const Eigen::Matrix2d clone = out.mode_cov(0);
    CloneNoise noise{};
    noise.transfer_x = out.mean()(0);
    noise.transfer_p = out.mean()(1);
    const double tx2 = noise.transfer_x * noise.transfer_x;
    const double tp2 = noise.transfer_p * noise.transfer_p;
    noise.added_noise_x = (clone(0, 0) - tx2) / tx2;
    noise.added_noise_p = (clone(1, 1) - tp2) / tp2;
    return noise;
}

CloneSet::CloneSet(GaussianState state, ModePair clone1, ModePair clone2, Machine machine, double v_s)
    : state_(std::move(state)), clone1_(clone1), clone2_(clone2), machine_(machine), v_s_(v_s) {
    if (state_.num_modes() != 4) {
        throw std::invalid_argument("CloneSet: expected exactly four output modes");
    }
    if (clone1_ != expected_clone1(machine_) || clone2_ != expected_clone2(machine_)) {
        throw std::invalid_argument("CloneSet: clone pairing does not match the " +
                                    std::string(to_string(machine_)) + " machine");
    }
}

ModePair CloneSet::expected_clone1(Machine machine) {
    return machine == Machine::kLocal ? ModePair{0, 3} : ModePair{0, 1};
}

ModePair CloneSet::expected_clone2(Machine machine) {
    return machine == Machine::kLocal ? ModePair{1, 2} : ModePair{2, 3};
}

ModePair CloneSet::clone_pair(int which) const {
    if (which == 1) return clone1_;
    if (which == 2) return clone2_;
    throw std::invalid_argument("CloneSet: clone index must be 1 or 2");
}

GaussianState CloneSet::clone(int which) const {
    const ModePair pair = clone_pair(which);
    const int order[] = {pair.first, pair.second};
    return select_modes(state_, order);
}

Matrix CloneSet::canonical_cov() const {
    const int order[] = {clone1_.first, clone1_.second, clone2_.first, clone2_.second};
    return select_modes(state_, order).cov();
}

CloneSet local_ecloner(const GaussianState& epr, CloneGain gain) {
    require_two_modes(epr, "local_ecloner");
    const double v_s = squeezing_from_arm_variance(epr.mode_cov(0)(0, 0));
    GaussianState s = linear_cloner(epr, 0, gain);  // (1A, epr2, 1B)
    s = linear_cloner(s, 1, gain);                   // (1A, 2A, 1B, 2B)
    const int physical[] = {0, 2, 1, 3};
    return CloneSet(select_modes(s, physical), CloneSet::expected_clone1(Machine::kLocal),
                    CloneSet::expected_clone2(Machine::kLocal), Machine::kLocal, v_s);
}

CloneSet global_ecloner(const GaussianState& epr, double v_s, CloneGain gain) {
    require_two_modes(epr, "global_ecloner");
    require_squeezing(v_s, "global_ecloner");
    const double s = std::sqrt(v_s);

    GaussianState st = apply(beamsplitter(0.5, 0, 1), epr);  // (sqz1, sqz2)
    st = apply(squeeze_gate(1.0 / s, 0), st);
    st = apply(squeeze_gate(s, 1), st);
    st = linear_cloner(st, 0, gain);  // (sqz1A, sqz2, sqz1B)
    st = linear_cloner(st, 1, gain);  // (sqz1A, sqz2A, sqz1B, sqz2B)
    st = apply(squeeze_gate(s, 0), st);
    st = apply(squeeze_gate(1.0 / s, 1), st);
    st = apply(squeeze_gate(s, 2), st);
    st = apply(squeeze_gate(1.0 / s, 3), st);
    st = apply(beamsplitter(0.5, 0, 1), st);  // (epr1A, epr1B)
    st = apply(beamsplitter(0.5, 2, 3), st);  // (epr2A, epr2B)
    return CloneSet(std::move(st), CloneSet::expected_clone1(Machine::kGlobal),
                    CloneSet::expected_clone2(Machine::kGlobal), Machine::kGlobal, v_s);
}

CloneSet run_machine(Machine machine, double v_s, CloneGain gain) {
    const GaussianState epr = epr_source(v_s);
    return machine == Machine::kLocal ? local_ecloner(epr, gain) : global_ecloner(epr, v_s, gain);
}

}  // namespace ecloner
