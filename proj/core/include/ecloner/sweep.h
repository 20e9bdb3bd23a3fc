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

#ifndef ECLONER_SWEEP_H_
#define ECLONER_SWEEP_H_

#include <cstdint>
#include <iosfwd>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace ecloner {

struct SweepOptions {
    int points = 200;
    double v_min = 0.01;
    std::uint64_t mc_shots = 0;  // 0 disables sampling
    std::uint64_t seed = 0;
    double gain = std::numbers::sqrt2;
};

struct McColumns {
    double i_local, i_local_err;
    double i_global, i_global_err;
    double eps_local, eps_local_err;
    double eps_global, eps_global_err;
};

/// One grid point. Criteria are evaluated on clone 1 of each machine.
struct SweepRecord {
    double v_s;
    double squeezing_db;
    double i_local;
    double i_global;
    double eps_local;
    double eps_global;
    double f_local;
    double f_global;
    std::optional<McColumns> mc;
};

/// Where a global-machine criterion crosses 1, next to the quoted values.
struct Threshold {
    std::string criterion;  // "inseparability" or "epr_paradox"
    std::optional<double> v_s;
    std::optional<double> squeezing_db;
    double quoted_v_s;
    double quoted_db;
    std::string note;
};

/// `points` log-spaced values on [v_min, 1], both ends included.
std::vector<double> log_grid(int points, double v_min);

/// Circuit-derived criteria and fidelities at one squeezing value.
SweepRecord evaluate_point(double v_s, double gain = std::numbers::sqrt2);

std::vector<SweepRecord> run_sweep(const SweepOptions& options);

/// Bisects the global machine's criteria (circuit route) for the crossing of 1.
std::vector<Threshold> find_thresholds(double gain = std::numbers::sqrt2, double tolerance = 1e-12);

inline constexpr const char* kCsvHeader = "v_s,squeezing_db,i_local,i_global,eps_local,eps_global,f_local,f_global";
inline constexpr const char* kMcCsvColumns =
    "mc_i_local,mc_i_local_err,mc_i_global,mc_i_global_err,mc_eps_local,mc_eps_local_err,mc_eps_global,"
    "mc_eps_global_err";

/// %.12g formatting used by both emitters.
std::string format_number(double value);

void write_csv(std::ostream& out, const std::vector<SweepRecord>& records);
void write_json(std::ostream& out, const std::vector<SweepRecord>& records);
/// Plain-text block; every line starts with `prefix`.
void write_threshold_report(std::ostream& out, const std::vector<Threshold>& thresholds, const SweepOptions& options,
                            const std::string& prefix);

}  // namespace ecloner

#endif  // ECLONER_SWEEP_H_
