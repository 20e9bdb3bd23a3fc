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

#include "ecloner/sweep.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

#include "ecloner/cloning_circuits.h"
#include "ecloner/criteria.h"
#include "ecloner/fidelity.h"
#include "ecloner/monte_carlo.h"

namespace ecloner {

namespace {

struct MachineFigures {
    double inseparability;
    double epr_paradox;
    double fidelity;
};

MachineFigures machine_figures(Machine machine, double v_s, double gain, bool with_fidelity = true) {
    const GaussianState epr = epr_source(v_s);
    const CloneSet clones =
        machine == Machine::kLocal ? local_ecloner(epr, CloneGain::uniform(gain))
                                   : global_ecloner(epr, v_s, CloneGain::uniform(gain));
    const GaussianState clone1 = clones.clone(1);
    const CorrelationMatrix cm = correlation_matrix(clone1, 0, 1);
    const double fidelity = with_fidelity ? pure_mixed_fidelity(epr, clone1).value : 0.0;
    return {inseparability(cm), epr_paradox(cm), fidelity};
}

std::optional<double> bisect_crossing(const std::function<double(double)>& f, double lo, double hi,
                                      double tolerance) {
    double f_lo = f(lo);
    const double f_hi = f(hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if ((f_lo < 0.0) == (f_hi < 0.0)) return std::nullopt;
    for (int iter = 0; iter < 200 && hi - lo > tolerance; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = f(mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid < 0.0) == (f_lo < 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

double rounded(double value) {
    return std::strtod(format_number(value).c_str(), nullptr);
}

}  // namespace

std::vector<double> log_grid(int points, double v_min) {
    if (points < 2) {
        throw std::invalid_argument("log_grid: need at least two points");
    }
    if (!(v_min > 0.0 && v_min < 1.0)) {
        throw std::invalid_argument("log_grid: v_min must lie in (0, 1)");
    }
    std::vector<double> grid(static_cast<std::size_t>(points));
    const double log_min = std::log(v_min);
    for (int k = 0; k < points; ++k) {
        grid[k] = std::exp(log_min * (1.0 - static_cast<double>(k) / (points - 1)));
    }
    grid.front() = v_min;
    grid.back() = 1.0;
    return grid;
}

SweepRecord evaluate_point(double v_s, double gain) {
    const MachineFigures local = machine_figures(Machine::kLocal, v_s, gain);
    const MachineFigures global = machine_figures(Machine::kGlobal, v_s, gain);
    return {v_s,           squeezing_db(v_s),   local.inseparability, global.inseparability,
            local.epr_paradox, global.epr_paradox, local.fidelity,       global.fidelity,
            std::nullopt};
}

std::vector<SweepRecord> run_sweep(const SweepOptions& options) {
    const std::vector<double> grid = log_grid(options.points, options.v_min);
    std::vector<SweepRecord> records;
    records.reserve(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
        SweepRecord record = evaluate_point(grid[k], options.gain);
        if (options.mc_shots > 0) {
            SampleConfig config;
            config.v_s = grid[k];
            config.shots = options.mc_shots;
            config.seed = options.seed;
            config.batches = static_cast<int>(std::clamp<std::uint64_t>(options.mc_shots / 10, kMinCriteriaBatches, 100));
            config.gain = CloneGain::uniform(options.gain);
            config.machine = Machine::kLocal;
            config.stream = 2 * k;
            const CriteriaEstimates local = estimate_criteria(sample_circuit(config));
            config.machine = Machine::kGlobal;
            config.stream = 2 * k + 1;
            const CriteriaEstimates global = estimate_criteria(sample_circuit(config));
            record.mc = McColumns{local.clone1.inseparability.value,  local.clone1.inseparability.error,
                                  global.clone1.inseparability.value, global.clone1.inseparability.error,
                                  local.clone1.epr_paradox.value,     local.clone1.epr_paradox.error,
                                  global.clone1.epr_paradox.value,    global.clone1.epr_paradox.error};
        }
        records.push_back(record);
    }
    return records;
}

std::vector<Threshold> find_thresholds(double gain, double tolerance) {
    constexpr double kLo = 1e-3;
    constexpr double kHi = 1.0;
    auto insep = [gain](double v) { return machine_figures(Machine::kGlobal, v, gain, false).inseparability - 1.0; };
    auto epr = [gain](double v) { return machine_figures(Machine::kGlobal, v, gain, false).epr_paradox - 1.0; };

    std::vector<Threshold> out;
    Threshold t_insep{"inseparability", bisect_crossing(insep, kLo, kHi, tolerance), std::nullopt, 0.5, 3.0, ""};
    Threshold t_epr{"epr_paradox", bisect_crossing(epr, kLo, kHi, tolerance), std::nullopt, 0.67, 5.7, ""};
    for (Threshold* t : {&t_insep, &t_epr}) {
        if (t->v_s) t->squeezing_db = squeezing_db(*t->v_s);
    }
    t_insep.note = "quoted values agree with each other and with the computed crossing";
    t_epr.note = "quoted v_s=0.67 corresponds to " + format_number(squeezing_db(0.67)) +
                 " dB and is inconsistent with the quoted 5.7 dB; the computed crossing is at v_s = 2 - sqrt(3)";
    out.push_back(std::move(t_insep));
    out.push_back(std::move(t_epr));
    return out;
}

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

void write_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
    const bool with_mc = !records.empty() && records.front().mc.has_value();
    out << kCsvHeader;
    if (with_mc) out << ',' << kMcCsvColumns;
    out << '\n';
    for (const SweepRecord& r : records) {
        const double values[] = {r.v_s,       r.squeezing_db, r.i_local, r.i_global,
                                 r.eps_local, r.eps_global,   r.f_local, r.f_global};
        for (std::size_t i = 0; i < std::size(values); ++i) {
            if (i) out << ',';
            out << format_number(values[i]);
        }
        if (with_mc && r.mc) {
            const McColumns& m = *r.mc;
            for (double v : {m.i_local, m.i_local_err, m.i_global, m.i_global_err, m.eps_local, m.eps_local_err,
                             m.eps_global, m.eps_global_err}) {
                out << ',' << format_number(v);
            }
        }
        out << '\n';
    }
}

void write_json(std::ostream& out, const std::vector<SweepRecord>& records) {
    nlohmann::ordered_json array = nlohmann::ordered_json::array();
    for (const SweepRecord& r : records) {
        nlohmann::ordered_json obj;
        obj["v_s"] = rounded(r.v_s);
        obj["squeezing_db"] = rounded(r.squeezing_db);
        obj["i_local"] = rounded(r.i_local);
        obj["i_global"] = rounded(r.i_global);
        obj["eps_local"] = rounded(r.eps_local);
        obj["eps_global"] = rounded(r.eps_global);
        obj["f_local"] = rounded(r.f_local);
        obj["f_global"] = rounded(r.f_global);
        if (r.mc) {
            const McColumns& m = *r.mc;
            obj["mc_i_local"] = rounded(m.i_local);
            obj["mc_i_local_err"] = rounded(m.i_local_err);
            obj["mc_i_global"] = rounded(m.i_global);
            obj["mc_i_global_err"] = rounded(m.i_global_err);
            obj["mc_eps_local"] = rounded(m.eps_local);
            obj["mc_eps_local_err"] = rounded(m.eps_local_err);
            obj["mc_eps_global"] = rounded(m.eps_global);
            obj["mc_eps_global_err"] = rounded(m.eps_global_err);
        }
        array.push_back(std::move(obj));
    }
    out << array.dump(2) << '\n';
}

void write_threshold_report(std::ostream& out, const std::vector<Threshold>& thresholds, const SweepOptions& options,
                            const std::string& prefix) {
    out << prefix << "thresholds (global machine, criterion = 1, bisection on the circuit output)\n";
    for (const Threshold& t : thresholds) {
        out << prefix << t.criterion << ": ";
        if (t.v_s) {
            out << "v_s=" << format_number(*t.v_s) << " (" << format_number(*t.squeezing_db) << " dB)";
        } else {
            out << "no crossing on (0, 1]";
        }
        out << "; quoted v_s=" << format_number(t.quoted_v_s) << " (" << format_number(t.quoted_db) << " dB)\n";
        out << prefix << "  note: " << t.note << '\n';
    }
    out << prefix << "gain=" << format_number(options.gain) << '\n';
    if (options.mc_shots > 0) {
        out << prefix << "mc_shots=" << options.mc_shots << " seed=" << options.seed << " rng=" << kSamplerRng
            << '\n';
    }
}

}  // namespace ecloner
