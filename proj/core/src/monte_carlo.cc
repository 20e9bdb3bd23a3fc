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

#include "ecloner/monte_carlo.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <thread>

#include "ecloner/criteria.h"

namespace ecloner {

namespace {

constexpr int kOutputs = 8;  // 4 modes x (x, p)
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

struct Quad {
    double x;
    double p;
};

Quad operator+(Quad a, Quad b) { return {a.x + b.x, a.p + b.p}; }
Quad operator-(Quad a, Quad b) { return {a.x - b.x, a.p - b.p}; }
Quad operator*(double k, Quad a) { return {k * a.x, k * a.p}; }

class ShotSampler {
   public:
    ShotSampler(const SampleConfig& config, std::uint64_t batch)
        : config_(config),
          sqrt_v_(std::sqrt(config.v_s)),
          sqrt_disp_(std::sqrt(config.displacement_variance)) {
        std::seed_seq seq{static_cast<std::uint32_t>(config.seed), static_cast<std::uint32_t>(config.seed >> 32),
                          static_cast<std::uint32_t>(config.stream),
                          static_cast<std::uint32_t>(config.stream >> 32), static_cast<std::uint32_t>(batch),
                          static_cast<std::uint32_t>(batch >> 32)};
        engine_.seed(seq);
    }

    // One shot: fills raw outputs and the displacement applied to the input.
    void shot(std::array<double, kOutputs>& out, Quad& displacement) {
        const Quad sqz1{sqrt_v_ * normal(), normal() / sqrt_v_};
        const Quad sqz2{normal() / sqrt_v_, sqrt_v_ * normal()};
        displacement = {sqrt_disp_ * normal(), sqrt_disp_ * normal()};
        const Quad epr1 = kInvSqrt2 * (sqz1 + sqz2) + displacement;
        const Quad epr2 = kInvSqrt2 * (sqz1 - sqz2) + displacement;

        std::array<Quad, 4> modes;  // epr1A, epr1B, epr2A, epr2B
        if (config_.machine == Machine::kLocal) {
            clone(epr1, modes[0], modes[1]);
            clone(epr2, modes[2], modes[3]);
        } else {
            const double s = sqrt_v_;
            Quad a = kInvSqrt2 * (epr1 + epr2);
            Quad b = kInvSqrt2 * (epr1 - epr2);
            a = {a.x / s, a.p * s};
            b = {b.x * s, b.p / s};
            Quad a_clone_a, a_clone_b, b_clone_a, b_clone_b;
            clone(a, a_clone_a, a_clone_b);
            clone(b, b_clone_a, b_clone_b);
            a_clone_a = {a_clone_a.x * s, a_clone_a.p / s};
            a_clone_b = {a_clone_b.x * s, a_clone_b.p / s};
            b_clone_a = {b_clone_a.x / s, b_clone_a.p * s};
            b_clone_b = {b_clone_b.x / s, b_clone_b.p * s};
            modes[0] = kInvSqrt2 * (a_clone_a + b_clone_a);
            modes[1] = kInvSqrt2 * (a_clone_a - b_clone_a);
            modes[2] = kInvSqrt2 * (a_clone_b + b_clone_b);
            modes[3] = kInvSqrt2 * (a_clone_b - b_clone_b);
        }
        for (int m = 0; m < 4; ++m) {
            out[2 * m] = modes[m].x;
            out[2 * m + 1] = modes[m].p;
        }
    }

   private:
    double normal() { return gauss_(engine_); }
    Quad vacuum_noise() { return {normal(), normal()}; }

    // Split, dual homodyne, feed the classical record forward, split again.
    void clone(Quad in, Quad& clone_a, Quad& clone_b) {
        const Quad n1 = vacuum_noise();
        const Quad n2 = vacuum_noise();
        const Quad n3 = vacuum_noise();
        const Quad tapped = kInvSqrt2 * (in - n1);
        const Quad kept = kInvSqrt2 * (in + n1);
        const double x_record = kInvSqrt2 * (tapped.x - n2.x);
        const double p_record = kInvSqrt2 * (tapped.p + n2.p);
        const Quad fed{kept.x + config_.gain.x * x_record, kept.p + config_.gain.p * p_record};
        clone_a = kInvSqrt2 * (fed + n3);
        clone_b = kInvSqrt2 * (fed - n3);
    }

    const SampleConfig& config_;
    double sqrt_v_;
    double sqrt_disp_;
    std::mt19937_64 engine_;
    std::normal_distribution<double> gauss_{0.0, 1.0};
};

struct BatchSums {
    std::uint64_t count = 0;
    Eigen::Matrix<double, kOutputs, 1> raw_sum = Eigen::Matrix<double, kOutputs, 1>::Zero();
    Eigen::Matrix<double, kOutputs, 1> raw_sq = Eigen::Matrix<double, kOutputs, 1>::Zero();
    Eigen::Matrix<double, kOutputs, 1> res_sum = Eigen::Matrix<double, kOutputs, 1>::Zero();
    Eigen::Matrix<double, kOutputs, kOutputs> res_outer = Eigen::Matrix<double, kOutputs, kOutputs>::Zero();

    void merge(const BatchSums& other) {
        count += other.count;
        raw_sum += other.raw_sum;
        raw_sq += other.raw_sq;
        res_sum += other.res_sum;
        res_outer += other.res_outer;
    }

    Matrix covariance() const {
        const double n = static_cast<double>(count);
        Matrix cov = (res_outer - res_sum * res_sum.transpose() / n) / (n - 1.0);
        return 0.5 * (cov + cov.transpose());
    }
};

BatchSums run_batch(const SampleConfig& config, std::uint64_t batch, std::uint64_t shots) {
    ShotSampler sampler(config, batch);
    BatchSums sums;
    std::array<double, kOutputs> out{};
    Quad d{};
    for (std::uint64_t i = 0; i < shots; ++i) {
        sampler.shot(out, d);
        const Eigen::Map<const Eigen::Matrix<double, kOutputs, 1>> raw(out.data());
        Eigen::Matrix<double, kOutputs, 1> res = raw;
        for (int m = 0; m < 4; ++m) {
            res(2 * m) -= d.x;
            res(2 * m + 1) -= d.p;
        }
        sums.raw_sum += raw;
        sums.raw_sq += raw.cwiseProduct(raw);
        sums.res_sum += res;
        sums.res_outer.selfadjointView<Eigen::Lower>().rankUpdate(res);
    }
    const Eigen::Matrix<double, kOutputs, kOutputs> full = sums.res_outer.selfadjointView<Eigen::Lower>();
    sums.res_outer = full;
    sums.count = shots;
    return sums;
}

double batch_std_error(const std::vector<double>& values) {
    const double b = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= b;
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    return std::sqrt(ss / (b - 1.0) / b);
}

}  // namespace

SampleRun sample_circuit(const SampleConfig& config) {
    if (config.shots < 100) {
        throw std::invalid_argument("sample_circuit: need at least 100 shots");
    }
    if (!(config.v_s > 0.0 && config.v_s <= 1.0)) {
        throw std::invalid_argument("sample_circuit: v_s must lie in (0, 1]");
    }
    if (!(config.displacement_variance >= 0.0) || !std::isfinite(config.displacement_variance)) {
        throw std::invalid_argument("sample_circuit: displacement variance must be finite and nonnegative");
    }
    if (config.batches < 2 || static_cast<std::uint64_t>(config.batches) * 2 > config.shots) {
        throw std::invalid_argument("sample_circuit: batches must be >= 2 with at least 2 shots each");
    }
    if (!std::isfinite(config.gain.x) || !std::isfinite(config.gain.p)) {
        throw std::invalid_argument("sample_circuit: gains must be finite");
    }

    const auto batches = static_cast<std::uint64_t>(config.batches);
    std::vector<BatchSums> results(batches);
    const std::uint64_t base = config.shots / batches;
    const std::uint64_t extra = config.shots % batches;

    unsigned workers = config.threads > 0 ? static_cast<unsigned>(config.threads) : std::thread::hardware_concurrency();
    workers = std::clamp<unsigned>(workers, 1u, static_cast<unsigned>(batches));
    auto lane = [&](unsigned w) {
        for (std::uint64_t b = w; b < batches; b += workers) {
            results[b] = run_batch(config, b, base + (b < extra ? 1 : 0));
        }
    };
    if (workers == 1) {
        lane(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(lane, w);
    }

    BatchSums total;
    SampleRun run{config.machine,
                  config.v_s,
                  config.displacement_variance,
                  config.shots,
                  config.seed,
                  config.stream,
                  kSamplerRng,
                  {},
                  {},
                  {},
                  {},
                  {},
                  CloneSet::expected_clone1(config.machine),
                  CloneSet::expected_clone2(config.machine)};
    run.batch_covs.reserve(batches);
    for (const BatchSums& b : results) {
        total.merge(b);
        run.batch_covs.push_back(b.covariance());
    }

    const double n = static_cast<double>(total.count);
    run.estimated_mean = total.raw_sum / n;
    const Vector raw_var = (total.raw_sq - total.raw_sum.cwiseProduct(total.raw_sum) / n) / (n - 1.0);
    run.mean_standard_errors = (raw_var / n).cwiseSqrt();
    run.estimated_cov = total.covariance();

    run.standard_errors = Matrix::Zero(kOutputs, kOutputs);
    std::vector<double> entry(batches);
    for (int i = 0; i < kOutputs; ++i) {
        for (int j = 0; j < kOutputs; ++j) {
            for (std::uint64_t b = 0; b < batches; ++b) entry[b] = run.batch_covs[b](i, j);
            run.standard_errors(i, j) = batch_std_error(entry);
        }
    }
    return run;
}

CriteriaEstimates estimate_criteria(const SampleRun& run) {
    const auto batches = run.batch_covs.size();
    if (batches < static_cast<std::size_t>(kMinCriteriaBatches)) {
        throw std::invalid_argument("estimate_criteria: need at least 20 batches for error bars");
    }
    if (run.estimated_cov.rows() != kOutputs) {
        throw std::invalid_argument("estimate_criteria: run does not cover a four-mode clone layout");
    }
    auto estimate_pair = [&](ModePair pair) {
        std::vector<double> insep(batches);
        std::vector<double> epr(batches);
        for (std::size_t b = 0; b < batches; ++b) {
            const CorrelationMatrix cm = correlation_matrix(run.batch_covs[b], pair.first, pair.second);
            insep[b] = inseparability(cm);
            epr[b] = epr_paradox(cm);
        }
        const CorrelationMatrix pooled = correlation_matrix(run.estimated_cov, pair.first, pair.second);
        return CloneCriteriaEstimate{{inseparability(pooled), batch_std_error(insep)},
                                     {epr_paradox(pooled), batch_std_error(epr)}};
    };
    return {estimate_pair(run.clone1), estimate_pair(run.clone2)};
}

}  // namespace ecloner
