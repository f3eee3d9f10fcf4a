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
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "csv.hpp"
#include "validation.hpp"

namespace strongcouple::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitNumericalError = 3;

inline constexpr const char* kToolVersion = "0.1.0";

struct RunManifest {
    std::string command;
    std::string config_path;
    std::string output_dir;
    std::vector<EmittedFile> emitted_files;
    std::string tool_version = kToolVersion;
    double wall_time = 0.0;  // seconds
};

/// Serialized manifest.json text.
std::string manifest_json(const RunManifest& manifest);

/// `strongcouple run`. Without a config file the defaults are used.
int cmd_run(const std::optional<std::filesystem::path>& config, const std::filesystem::path& out_dir,
            std::ostream& out, std::ostream& err);

/// `strongcouple validate`.
int cmd_validate(const ValidateOptions& options, std::ostream& out, std::ostream& err);

/// `strongcouple sweep`.
int cmd_sweep(const std::filesystem::path& grid, const std::filesystem::path& out_dir, std::ostream& out,
              std::ostream& err);

}  // namespace strongcouple::cli
