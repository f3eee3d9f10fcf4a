// Copyright 2026 The strongcouple Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/random_states.hpp"

namespace sc = strongcouple::cli;

int main(int argc, char** argv) {
    CLI::App app{"GADC thermodynamics under strong coupling"};
    app.set_version_flag("--version", sc::kToolVersion);
    app.require_subcommand(1);

    std::string config_path;
    std::string run_out = "out";
    auto* run = app.add_subcommand("run", "Run one experiment and write CSV tables");
    run->add_option("--config", config_path, "JSON config (defaults when omitted)");
    run->add_option("--out", run_out, "Output directory")->required();

    sc::ValidateOptions vopt;
    std::string coupling = "symmetric";
    auto* validate = app.add_subcommand("validate", "Run the invariant suites");
    validate->add_flag("--strict", vopt.strict, "Treat model notes as failures");
    validate->add_option("--samples", vopt.n_samples, "Grid size for the first-law suite");
    validate->add_option("--closure-tolerance", vopt.closure_tolerance, "Closure bound for the first-law suite");
    validate->add_option("--coupling", coupling, "Exchange-block sign used by the consistency checks")
        ->check(CLI::IsMember({"symmetric", "antisymmetric"}));

    std::string grid_path;
    std::string sweep_out = "sweep";
    auto* sweep = app.add_subcommand("sweep", "Run a parameter grid and write one summary row per config");
    sweep->add_option("--grid", grid_path, "JSON grid file")->required();
    sweep->add_option("--out", sweep_out, "Output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : sc::kExitInputError;
    }

    if (*run) {
        std::optional<std::filesystem::path> cfg;
        if (!config_path.empty()) cfg = config_path;
        return sc::cmd_run(cfg, run_out, std::cout, std::cerr);
    }
    if (*validate) {
        vopt.coupling_sign = coupling == "antisymmetric" ? strongcouple::channels::CouplingSign::antisymmetric
                                                         : strongcouple::channels::CouplingSign::symmetric;
        vopt.seed = sc::seed_from_env();
        return sc::cmd_validate(vopt, std::cout, std::cerr);
    }
    return sc::cmd_sweep(grid_path, sweep_out, std::cout, std::cerr);
}
