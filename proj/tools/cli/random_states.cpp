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

#include "random_states.hpp"

#include <cstdlib>
#include <string>

namespace strongcouple::cli {

using spectra::ComplexMatrix;

std::uint64_t seed_from_env(std::uint64_t fallback) {
    const char* raw = std::getenv("STRONGCOUPLE_SEED");
    if (raw == nullptr || *raw == '\0') return fallback;
    try {
        return std::stoull(raw);
    } catch (const std::exception&) {
        return fallback;
    }
}

namespace {

ComplexMatrix gaussian(std::mt19937_64& rng, Eigen::Index rows, Eigen::Index cols) {
    std::normal_distribution<double> normal(0.0, 1.0);
    ComplexMatrix g(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j)
        for (Eigen::Index i = 0; i < rows; ++i) g(i, j) = {normal(rng), normal(rng)};
    return g;
}

}  // namespace

ComplexMatrix random_hermitian(std::mt19937_64& rng, Eigen::Index dim) {
    const ComplexMatrix g = gaussian(rng, dim, dim);
    return 0.5 * (g + g.adjoint());
}

ComplexMatrix random_unitary(std::mt19937_64& rng, Eigen::Index dim) {
    const Eigen::HouseholderQR<ComplexMatrix> qr(gaussian(rng, dim, dim));
    return qr.householderQ() * ComplexMatrix::Identity(dim, dim);
}

spectra::DensityOperator random_density(std::mt19937_64& rng, Eigen::Index dim, Eigen::Index rank) {
    const ComplexMatrix g = gaussian(rng, dim, rank == 0 ? dim : rank);
    ComplexMatrix rho = g * g.adjoint();
    rho /= rho.trace().real();
    return spectra::DensityOperator(rho);
}

}  // namespace strongcouple::cli
