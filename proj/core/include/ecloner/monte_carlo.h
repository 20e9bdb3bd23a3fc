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

#ifndef ECLONER_MONTE_CARLO_H_
#define ECLONER_MONTE_CARLO_H_

#include <cstdint>
#include <string>
#include <vector>

#include "ecloner/cloning_circuits.h"
#include "ecloner/gaussian_state.h"

namespace ecloner {

/// Generator used by the sampler, reported in every SampleRun.
inline constexpr const char* kSamplerRng = "mt19937_64 seeded by seed_seq{seed_lo, seed_hi, stream, batch}; std::normal_distribution";

struct SampleConfig {
    Machine machine = Machine::kLocal;
    double v_s = 1.0;
    double displacement_variance = 0.0;
    std::uint64_t shots = 1'000'000;
    std::uint64_t seed = 0;
    std::uint64_t stream = 0;  // distinguishes runs sharing a master seed
    int batches = 100;
    CloneGain gain{};
    int threads = 0;  // 0: std::thread::hardware_concurrency()
};

/**
 * Moment estimates from sampling the measure-and-feedforward circuit.
 *
 * Output modes follow CloneSet order (epr1A, epr1B, epr2A, epr2B).
 * `estimated_mean` averages the raw output quadratures. `estimated_cov` is
 * the covariance conditional on the random input displacement, i.e. of the
 * outputs minus the displacement drawn for that shot. Standard errors are
 * batch-means estimates; `batch_covs` keeps the per-batch covariances.
 */
struct SampleRun {
    Machine machine;
    double v_s;
    double displacement_variance;
    std::uint64_t shots;
    std::uint64_t seed;
    std::uint64_t stream;
    std::string rng;
    Vector estimated_mean;
    Vector mean_standard_errors;
    Matrix estimated_cov;
    Matrix standard_errors;
    std::vector<Matrix> batch_covs;
    ModePair clone1;
    ModePair clone2;
};

SampleRun sample_circuit(const SampleConfig& config);

struct Estimate {
    double value;
    double error;  // batch-means standard error
};

struct CloneCriteriaEstimate {
    Estimate inseparability;
    Estimate epr_paradox;
};

struct CriteriaEstimates {
    CloneCriteriaEstimate clone1;
    CloneCriteriaEstimate clone2;
};

/// Evaluates both criteria on each sampled clone pair. Needs >= 20 batches.
CriteriaEstimates estimate_criteria(const SampleRun& run);

inline constexpr int kMinCriteriaBatches = 20;

}  // namespace ecloner

#endif  // ECLONER_MONTE_CARLO_H_
