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

// Sweeps input squeezing through both entanglement cloners and prints the
// criteria and fidelity curves plus the global machine's crossing points.

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ecloner/sweep.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitOutput = 2;

int usage_error(const CLI::App& app, const std::string& message) {
    std::cerr << "error: " << message << "\n\n" << app.help();
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    ecloner::SweepOptions options;
    std::string format = "csv";
    std::string output;

    CLI::App app{"Entanglement cloner sweep: criteria and fidelities versus input squeezing", "ecloner"};
    app.add_option("--points", options.points, "Number of log-spaced grid points on [v-min, 1]")
        ->capture_default_str();
    app.add_option("--v-min", options.v_min, "Smallest squeezing variance on the grid")->capture_default_str();
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_option("--output", output, "Output file (default: stdout)");
    app.add_option("--mc-shots", options.mc_shots, "Monte-Carlo shots per machine and grid point (0 disables)")
        ->capture_default_str();
    app.add_option("--seed", options.seed, "Master seed for Monte-Carlo sampling")->capture_default_str();
    app.add_option("--gain", options.gain, "Feedforward gain of every linear cloner (unity gain is sqrt(2))")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return usage_error(app, e.what());
    }

    if (options.points < 2) return usage_error(app, "--points must be at least 2");
    if (!(options.v_min > 0.0 && options.v_min < 1.0)) return usage_error(app, "--v-min must lie in (0, 1)");
    if (options.mc_shots != 0 && options.mc_shots < 100) return usage_error(app, "--mc-shots must be 0 or >= 100");
    if (!std::isfinite(options.gain)) return usage_error(app, "--gain must be finite");

    std::ofstream file;
    if (!output.empty()) {
        file.open(output);
        if (!file) {
            std::cerr << "error: cannot open output file '" << output << "'\n";
            return kExitOutput;
        }
    }
    std::ostream& out = output.empty() ? std::cout : file;

    const auto records = ecloner::run_sweep(options);
    const auto thresholds = ecloner::find_thresholds(options.gain);
    if (format == "csv") {
        ecloner::write_csv(out, records);
        ecloner::write_threshold_report(out, thresholds, options, "# ");
    } else {
        ecloner::write_json(out, records);
        ecloner::write_threshold_report(std::cerr, thresholds, options, "");
    }
    out.flush();
    if (!out) {
        std::cerr << "error: failed writing output\n";
        return kExitOutput;
    }
    return 0;
}
