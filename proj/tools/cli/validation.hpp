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

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "strongcouple/channels.hpp"

namespace strongcouple::cli {

struct ValidateOptions {
    bool strict = false;                  // model notes count as failures
    std::size_t n_samples = 2001;         // grid for the first-law suite
    double closure_tolerance = 1e-4;
    channels::CouplingSign coupling_sign = channels::CouplingSign::symmetric;
    std::uint64_t seed = 20260101;
};

struct CheckResult {
    std::string suite;
    std::string name;
    bool passed = false;
    bool note = false;  // informational unless strict
    std::string detail;  // observed vs expected
};

/// Runs every invariant suite. Order is fixed.
std::vector<CheckResult> run_validation(const ValidateOptions& options);

/// Prints one line per check and returns the process exit code
/// (0 when nothing failed, 1 otherwise).
int report_validation(const std::vector<CheckResult>& checks, bool strict, std::ostream& out);

}  // namespace strongcouple::cli
