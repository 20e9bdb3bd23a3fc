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

#include <cmath>
#include <random>

#include "gtest/gtest.h"

#include "ecloner/cloning_circuits.h"
#include "ecloner/errors.h"
#include "test_util.h"

using namespace ecloner;

namespace {

double local_i(double v) { return v + 1.0; }
double global_i(double v) { return 2.0 * v; }
double global_eps(double v) { return 16.0 / ((v + 1.0 / v) * (v + 1.0 / v)); }

CorrelationMatrix clone1_cm(Machine m, double v) {
    const CloneSet c = run_machine(m, v);
    return correlation_matrix(c.state(), c.clone1().first, c.clone1().second);
}

}  // namespace

TEST(criteria, correlation_matrix_of_epr) {
    const CorrelationMatrix cm = correlation_matrix(epr_source(0.5), 0, 1);
    using Q = Quadrature;
    using P = Party;
    EXPECT_NEAR(cm(Q::kAmplitude, Q::kAmplitude, P::kX, P::kX), 1.25, 1e-12);
    EXPECT_NEAR(cm(Q::kPhase, Q::kPhase, P::kY, P::kY), 1.25, 1e-12);
    EXPECT_NEAR(cm(Q::kAmplitude, Q::kAmplitude, P::kX, P::kY), -0.75, 1e-12);
    EXPECT_NEAR(cm(Q::kPhase, Q::kPhase, P::kX, P::kY), 0.75, 1e-12);
    EXPECT_NEAR(cm(Q::kAmplitude, Q::kPhase, P::kX, P::kY), 0.0, 1e-12);
}

TEST(criteria, vacuum_sits_on_the_boundary) {
    const CorrelationMatrix cm = correlation_matrix(vacuum(2), 0, 1);
    EXPECT_DOUBLE_EQ(inseparability(cm), 1.0);
    EXPECT_DOUBLE_EQ(epr_paradox(cm), 1.0);
}

TEST(criteria, pure_epr_values) {
    for (double v : {0.05, 0.2, 0.5, 0.9, 1.0}) {
        const CorrelationMatrix cm = correlation_matrix(epr_source(v), 0, 1);
        EXPECT_NEAR(inseparability(cm), v, 1e-12);
        EXPECT_NEAR(epr_paradox(cm), 4.0 / ((v + 1.0 / v) * (v + 1.0 / v)), 1e-12);
    }
}

TEST(criteria, displacement_invariance) {
    std::mt19937_64 rng(8);
    const GaussianState e = epr_source(0.3);
    const CorrelationMatrix base = correlation_matrix(e, 0, 1);
    for (int i = 0; i < 20; ++i) {
        const CorrelationMatrix cm = correlation_matrix(displace(e, fixtures::random_vector(rng, 4, 50.0)), 0, 1);
        EXPECT_EQ(inseparability(cm), inseparability(base));
        EXPECT_EQ(epr_paradox(cm), epr_paradox(base));
    }
}

TEST(criteria, local_machine_values) {
    for (double v : {0.01, 0.1, 0.267949, 0.5, 0.8, 1.0}) {
        const CorrelationMatrix cm = clone1_cm(Machine::kLocal, v);
        EXPECT_NEAR(inseparability(cm), local_i(v), 1e-10);
        EXPECT_NEAR(epr_paradox(cm), 4.0, 1e-10);
    }
}

TEST(criteria, global_machine_values) {
    for (double v : {0.01, 0.1, 0.267949, 0.5, 0.8, 1.0}) {
        const CorrelationMatrix cm = clone1_cm(Machine::kGlobal, v);
        EXPECT_NEAR(inseparability(cm), global_i(v), 1e-10);
        EXPECT_NEAR(epr_paradox(cm), global_eps(v), 1e-10);
    }
    // At v_s = 0.5: 2.5 on the diagonal, −1.5 cross, so ε = (2.5 − 0.9)² = 2.56.
    EXPECT_NEAR(epr_paradox(clone1_cm(Machine::kGlobal, 0.5)), 2.56, 1e-12);
}

TEST(criteria, swap_symmetry_for_symmetric_states) {
    for (Machine m : {Machine::kLocal, Machine::kGlobal}) {
        for (double v : {0.1, 0.5, 1.0}) {
            const CorrelationMatrix cm = clone1_cm(m, v);
            EXPECT_NEAR(inseparability(cm), inseparability(cm.swapped()), 1e-12);
            EXPECT_NEAR(epr_paradox(cm), epr_paradox(cm.swapped()), 1e-12);
        }
    }
}

TEST(criteria, symmetrized_direction_takes_minimum) {
    // Asymmetric pair: extra noise only on y.
    const GaussianState epr = epr_source(0.4);
    Matrix cov = epr.cov();
    cov.block<2, 2>(2, 2) += 3.0 * Eigen::Matrix2d::Identity();
    const CorrelationMatrix cm = correlation_matrix(GaussianState(epr.mean(), cov), 0, 1);
    const double forward = epr_paradox(cm);
    const double backward = epr_paradox(cm.swapped());
    EXPECT_NE(forward, backward);
    EXPECT_DOUBLE_EQ(epr_paradox(cm, EprDirection::kSymmetrizedMin), std::min(forward, backward));
    EXPECT_NEAR(inseparability(cm), inseparability(cm.swapped()), 1e-12);
}

TEST(criteria, errors) {
    EXPECT_THROW(correlation_matrix(vacuum(2), 1, 1), std::invalid_argument);
    EXPECT_THROW(correlation_matrix(vacuum(2), 0, 2), std::invalid_argument);
    Eigen::Matrix4d degenerate = Eigen::Matrix4d::Identity();
    degenerate(2, 2) = 0.0;
    EXPECT_THROW(epr_paradox(CorrelationMatrix(degenerate)), DegenerateInput);
    Eigen::Matrix4d asym = Eigen::Matrix4d::Identity();
    asym(0, 1) = 0.5;
    EXPECT_THROW(CorrelationMatrix{asym}, std::invalid_argument);
    EXPECT_THROW(squeezing_db(0.0), std::invalid_argument);
}

TEST(criteria, squeezing_db) {
    EXPECT_EQ(squeezing_db(1.0), 0.0);
    EXPECT_FALSE(std::signbit(squeezing_db(1.0)));
    EXPECT_NEAR(squeezing_db(0.5), 3.0103, 1e-4);
    EXPECT_NEAR(squeezing_db(0.01), 20.0, 1e-12);
}

TEST(criteria, global_crossings) {
    // Scan a fine grid and locate the single sign change of each criterion.
    const int n = 20000;
    int i_changes = 0;
    int eps_changes = 0;
    double i_cross = 0.0;
    double eps_cross = 0.0;
    double prev_v = 0.0;
    double prev_i = 0.0;
    double prev_eps = 0.0;
    for (int k = 0; k <= n; ++k) {
        const double v = 0.01 + 0.99 * k / n;
        const double i = global_i(v) - 1.0;
        const double eps = global_eps(v) - 1.0;
        if (k > 0) {
            if ((prev_i < 0) != (i < 0)) {
                ++i_changes;
                i_cross = 0.5 * (v + prev_v);
            }
            if ((prev_eps < 0) != (eps < 0)) {
                ++eps_changes;
                eps_cross = 0.5 * (v + prev_v);
            }
        }
        prev_v = v;
        prev_i = i;
        prev_eps = eps;
    }
    EXPECT_EQ(i_changes, 1);
    EXPECT_EQ(eps_changes, 1);
    EXPECT_NEAR(i_cross, 0.5, 1e-4);
    EXPECT_NEAR(eps_cross, 2.0 - std::sqrt(3.0), 1e-4);

    // The circuit route agrees on each side of the crossings.
    EXPECT_LT(inseparability(clone1_cm(Machine::kGlobal, 0.49)), 1.0);
    EXPECT_GT(inseparability(clone1_cm(Machine::kGlobal, 0.51)), 1.0);
    EXPECT_LT(epr_paradox(clone1_cm(Machine::kGlobal, 0.26)), 1.0);
    EXPECT_GT(epr_paradox(clone1_cm(Machine::kGlobal, 0.28)), 1.0);
}

TEST(criteria, local_machine_never_inseparable) {
    double prev = 0.0;
    for (int k = 0; k <= 200; ++k) {
        const double v = 0.001 + 0.999 * k / 200.0;
        const double i = inseparability(clone1_cm(Machine::kLocal, v));
        EXPECT_GE(i, 1.0);
        EXPECT_GT(i, prev);
        EXPECT_GE(epr_paradox(clone1_cm(Machine::kLocal, v)), 1.0);
        prev = i;
    }
}
