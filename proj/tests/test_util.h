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

#ifndef ECLONER_TESTS_TEST_UTIL_H_
#define ECLONER_TESTS_TEST_UTIL_H_

#include <numbers>
#include <random>
#include <vector>

#include "ecloner/gaussian_state.h"
#include "ecloner/symplectic.h"

namespace ecloner::fixtures {

// Random chain of built-in gates over `num_modes` modes.
inline std::vector<SymplecticOp> random_ops(std::mt19937_64& rng, int num_modes, int length) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<int> mode(0, num_modes - 1);
    std::vector<SymplecticOp> ops;
    for (int i = 0; i < length; ++i) {
        const int kind = num_modes > 1 ? static_cast<int>(unit(rng) * 3) : 1 + static_cast<int>(unit(rng) * 2);
        if (kind == 0) {
            int a = mode(rng);
            int b = mode(rng);
            while (b == a) b = mode(rng);
            ops.push_back(beamsplitter(unit(rng), a, b));
        } else if (kind == 1) {
            ops.push_back(squeeze_gate(std::exp(2.0 * unit(rng) - 1.0), mode(rng)));
        } else {
            ops.push_back(phase_rotation(2.0 * std::numbers::pi * unit(rng), mode(rng)));
        }
    }
    return ops;
}

inline Matrix compose(const std::vector<SymplecticOp>& ops, int num_modes) {
    Matrix s = Matrix::Identity(2 * num_modes, 2 * num_modes);
    for (const SymplecticOp& op : ops) s = op.embedded(num_modes) * s;
    return s;
}

inline GaussianState apply_all(const std::vector<SymplecticOp>& ops, GaussianState state) {
    for (const SymplecticOp& op : ops) state = apply(op, state);
    return state;
}

inline Vector random_vector(std::mt19937_64& rng, int size, double scale = 1.0) {
    std::normal_distribution<double> gauss(0.0, scale);
    Vector v(size);
    for (int i = 0; i < size; ++i) v(i) = gauss(rng);
    return v;
}

// Random pure state: symplectic image of the vacuum, randomly displaced.
inline GaussianState random_pure_state(std::mt19937_64& rng, int num_modes) {
    GaussianState s = apply_all(random_ops(rng, num_modes, 4 * num_modes), vacuum(num_modes));
    return displace(s, random_vector(rng, 2 * num_modes));
}

// Random mixed state: thermal modes then a random symplectic and displacement.
inline GaussianState random_mixed_state(std::mt19937_64& rng, int num_modes) {
    std::uniform_real_distribution<double> excess(0.0, 2.0);
    GaussianState s = thermal(1.0 + excess(rng));
    for (int m = 1; m < num_modes; ++m) s = tensor(s, thermal(1.0 + excess(rng)));
    s = apply_all(random_ops(rng, num_modes, 4 * num_modes), s);
    return displace(s, random_vector(rng, 2 * num_modes));
}

}  // namespace ecloner::fixtures

#endif  // ECLONER_TESTS_TEST_UTIL_H_
