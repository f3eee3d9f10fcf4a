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

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "strongcouple/experiment.hpp"

namespace strongcouple::cli {

/// Parses an experiment config from JSON text. Recognized keys:
///
///   alpha, beta, gamma, t_max, n_samples,
///   integrator: {endpoint_subdivision, closure_tolerance},
///   outputs:    {diagnostics, plot_scripts}
///
/// Missing keys keep their defaults; unknown keys, wrong types and invalid
/// values throw InputError naming the field.
experiment::ExperimentConfig parse_config(const std::string& json_text);
experiment::ExperimentConfig load_config(const std::filesystem::path& path);

/// Parameter grid for `sweep`. alpha, beta and gamma may each be a number
/// or a non-empty array; the sweep is their cartesian product (alpha
/// slowest). With "scale_t_max_with_gamma": true each config uses
/// t_max / gamma, so all rows share one gamma*t axis.
struct SweepGrid {
    std::vector<double> alpha{0.70710678118654752};
    std::vector<double> beta{1.0};
    std::vector<double> gamma{1.0};
    experiment::ExperimentConfig base;
    bool scale_t_max_with_gamma = false;

    std::vector<experiment::ExperimentConfig> expand() const;
};

SweepGrid parse_sweep_grid(const std::string& json_text);
SweepGrid load_sweep_grid(const std::filesystem::path& path);

/// Reads a whole file; throws InputError if it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

}  // namespace strongcouple::cli
