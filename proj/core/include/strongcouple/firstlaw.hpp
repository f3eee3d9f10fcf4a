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

#include <functional>
#include <span>
#include <vector>

#include "strongcouple/spectra.hpp"

/// First-law bookkeeping along a sampled state trajectory.
///
/// With H = sum_n E_n |n><n| and rho = sum_k rho_k |k><k|, the internal
/// energy U = sum_{n,k} E_n rho_k |<n|k>|^2 changes through three channels:
///
///   work            dW = sum_{n,k} rho_k |c_nk|^2 dE_n
///   heat            dQ = sum_{n,k} E_n |c_nk|^2 drho_k
///   coherent energy dC = sum_{n,k} E_n rho_k d|c_nk|^2
///
/// so dU = dW + dQ + dC exactly. The integrals below evaluate each channel
/// with second-order finite differences in time and the composite trapezoid
/// rule on the same grid, which makes the closure residual O(h^2).
namespace strongcouple::firstlaw {

using spectra::DensityOperator;
using spectra::HermitianOperator;
using spectra::RealMatrix;
using spectra::SpectralDecomposition;

/// One time point with tracked spectra of H and rho.
struct TrajectorySample {
    double t = 0.0;
    SpectralDecomposition hamiltonian_spectrum;  // E_n, |n>
    SpectralDecomposition state_spectrum;        // rho_k, |k>
    RealMatrix overlaps;                         // (n, k) -> |<n|k>|^2
};

struct ThermoTrajectory {
    std::vector<double> times;
    std::vector<double> work;
    std::vector<double> heat;
    std::vector<double> coherent_energy;
    std::vector<double> internal_energy_change;
    std::vector<double> closure_residual;  // |dU - (W + Q + C)|
};

struct IntegratorSettings {
    int endpoint_subdivision = 32;   // sub-intervals used for [t0, t1]
    double closure_tolerance = 1e-4;  // energy units of the Hamiltonian
};

using HamiltonianSource = std::function<HermitianOperator(double)>;
using StateSource = std::function<DensityOperator(double)>;

/// Minimum |<v_i|v_{i+1}>| accepted when matching a branch between steps.
inline constexpr double kMinBranchOverlap = 0.70710678118654752;

/// Reorder eigenpairs so that branch j at step i+1 is the eigenvector with
/// the largest overlap with branch j at step i. Values are permuted, never
/// modified. Throws TrackingError (naming the step) if any best overlap is
/// <= 1/sqrt(2), which means the grid is too coarse to follow the branches.
std::vector<SpectralDecomposition> eigen_track(std::span<const SpectralDecomposition> samples);

/// Overlap matrix |<n|k>|^2 between Hamiltonian and state eigenbases.
RealMatrix overlap_probabilities(const SpectralDecomposition& hamiltonian, const SpectralDecomposition& state);

/// Diagonalize H(t) and rho(t) on `times`, track both sets of branches and
/// assemble samples.
std::vector<TrajectorySample> sample_trajectory(std::span<const double> times, const HamiltonianSource& hamiltonian,
                                                const StateSource& state);

/// Cumulative W(t_i), Q(t_i) and C(t_i) over the sample grid (value 0 at the
/// first sample). Input must be tracked; a branch discontinuity between
/// consecutive samples raises TrackingError.
std::vector<double> work_integral(std::span<const TrajectorySample> traj);
std::vector<double> heat_integral(std::span<const TrajectorySample> traj);
std::vector<double> coherent_energy_integral(std::span<const TrajectorySample> traj);

/// tr{H (rho_t - rho_0)}.
double internal_energy_change(const HermitianOperator& h, const DensityOperator& rho_t, const DensityOperator& rho_0);

/// Full trajectory on `times`. The first interval is re-sampled with
/// `settings.endpoint_subdivision` sub-steps and integrated on its own.
/// Internal energy change uses U(t) = tr{H(t) rho(t)} directly.
ThermoTrajectory thermo_trajectory(std::span<const double> times, const HamiltonianSource& hamiltonian,
                                   const StateSource& state, const IntegratorSettings& settings = {});

/// max_i |dU_i - (W_i + Q_i + C_i)|.
double first_law_closure(const ThermoTrajectory& traj);

/// Throws ClosureError if first_law_closure(traj) exceeds `tolerance`.
void require_closure(const ThermoTrajectory& traj, double tolerance, const char* label);

/// dy/dt on a monotone grid: three-point central differences in the
/// interior (non-uniform spacing allowed), second-order one-sided at the ends.
std::vector<double> finite_difference(std::span<const double> t, std::span<const double> y);

/// Composite trapezoid, cumulative; first entry 0.
std::vector<double> cumulative_trapezoid(std::span<const double> t, std::span<const double> f);

/// `n` equally spaced points on [t0, t1] (endpoints included).
std::vector<double> uniform_grid(double t0, double t1, std::size_t n);

}  // namespace strongcouple::firstlaw
