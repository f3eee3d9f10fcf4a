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
#include <random>

#include "strongcouple/spectra.hpp"

namespace strongcouple::cli {

/// Seed for randomized checks: STRONGCOUPLE_SEED if set and numeric, else
/// `fallback`. The core pipeline itself never draws random numbers.
std::uint64_t seed_from_env(std::uint64_t fallback = 20260101);

/// Random Hermitian matrix with Gaussian entries.
spectra::ComplexMatrix random_hermitian(std::mt19937_64& rng, Eigen::Index dim);

/// Haar-ish random unitary (QR of a complex Gaussian matrix).
spectra::ComplexMatrix random_unitary(std::mt19937_64& rng, Eigen::Index dim);

/// Random density operator G G^dagger / tr, rank `rank` (0 = full rank).
spectra::DensityOperator random_density(std::mt19937_64& rng, Eigen::Index dim, Eigen::Index rank = 0);

}  // namespace strongcouple::cli
