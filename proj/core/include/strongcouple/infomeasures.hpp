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

#include <span>
#include <vector>

#include "strongcouple/spectra.hpp"

namespace strongcouple::info {

using spectra::BipartiteDims;
using spectra::DensityOperator;

/// Time series of the information-theoretic observables of one run.
/// Entropies are in bits.
struct InfoSeries {
    std::vector<double> times;
    std::vector<double> entropy_s;
    std::vector<double> entropy_e;
    std::vector<double> entropy_se;
    std::vector<double> coherence_s;
    std::vector<double> coherence_e;
    std::vector<double> negativity;
    std::vector<double> mutual_information;
    std::vector<double> heat_asymmetry;
};

/// -sum lambda log2 lambda. Eigenvalues in [-1e-10, 1e-12] count as zero.
double von_neumann_entropy(const DensityOperator& rho);

/// sum_{i != j} |rho_ij| in the basis rho is written in.
double l1_coherence(const DensityOperator& rho);

/// (||rho^{T_first}||_1 - 1) / 2. Also evaluated as the sum of |negative
/// eigenvalues| of the partial transpose; a NumericalError is raised if the
/// two disagree by more than 1e-10.
double negativity(const DensityOperator& joint, BipartiteDims dims = {});

/// S(first) + S(second) - S(joint), in bits.
double mutual_information(const DensityOperator& joint, BipartiteDims dims = {});

/// |Q_S(t) + Q_E(t)| pointwise.
std::vector<double> heat_asymmetry(std::span<const double> q_s, std::span<const double> q_e);

struct ProportionalityReport {
    double ratio_mean = 0.0;
    double ratio_relative_spread = 0.0;  // max_i |r_i / mean - 1|
    std::size_t points = 0;
};

/// Ratio a_i / b_i over the points where both |a_i| and |b_i| reach
/// `mask_threshold`. Throws InputError on length mismatch or an empty mask.
ProportionalityReport proportionality_report(std::span<const double> a, std::span<const double> b,
                                             double mask_threshold = 1e-4);

}  // namespace strongcouple::info
