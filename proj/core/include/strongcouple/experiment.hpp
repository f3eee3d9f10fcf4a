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
#include <string>
#include <vector>

#include "strongcouple/channels.hpp"
#include "strongcouple/firstlaw.hpp"
#include "strongcouple/infomeasures.hpp"

/// End-to-end GADC scenario: thermodynamic trajectories of system and
/// environment, information measures, and the numerical cross-checks that
/// go with them.
namespace strongcouple::experiment {

struct OutputSelection {
    bool diagnostics = true;
    bool plot_scripts = true;
};

struct ExperimentConfig {
    double alpha = 0.70710678118654752;  // |+> initial system state
    double beta = 1.0;                   // inverse temperature times the gap
    double gamma = 1.0;                  // transition rate
    double t_max = 10.0;
    std::size_t n_samples = 2001;
    firstlaw::IntegratorSettings integrator;
    OutputSelection outputs;

    /// Throws InputError with a "config.<field>: ..." message.
    void validate() const;
    channels::GadcParams params() const;
    std::vector<double> grid() const;
};

struct MarkovRow {
    int steps = 0;
    double step_p = 0.0;
    double deviation = 0.0;  // max-entry |Phi^n[rho_S(0)] - rho_S(t)|
};

struct Diagnostics {
    double closure_residual_s = 0.0;
    double closure_residual_e = 0.0;
    double max_abs_work = 0.0;
    double max_energy_imbalance = 0.0;         // max |dU_S + dU_E|
    double max_triangle_deviation = 0.0;       // Kraus / partial-trace / closed-form routes
    double max_entropy_rate_imbalance = 0.0;   // max |dS_S/dt + dS_E/dt|
    std::vector<double> energy_imbalance;      // dU_S + dU_E per grid point
    std::vector<double> triangle_deviation;    // per grid point, both subsystems
    double markov_time = 0.0;
    std::vector<MarkovRow> markov;
};

struct ExperimentResult {
    ExperimentConfig config;
    firstlaw::ThermoTrajectory thermo_s;
    firstlaw::ThermoTrajectory thermo_e;
    info::InfoSeries info;
    Diagnostics diagnostics;
};

/// Runs the full scenario on config.grid(). Throws NumericalError if the
/// work is not identically zero (1e-12) or dU_S + dU_E exceeds 1e-10, and
/// ClosureError if either closure residual exceeds the configured tolerance.
ExperimentResult run(const ExperimentConfig& config);

/// Max-entry deviation between the n-fold iterated channel and the closed
/// form at time t, for each n. Requires gamma t / min(n) <= 1.
std::vector<MarkovRow> markov_convergence(const ExperimentConfig& config, double t, std::span<const int> step_counts);

/// Largest deviation among the three routes to rho_S(t) and rho_E(t):
/// Kraus operators applied to the initial state, the joint evolution followed
/// by a partial trace, and the closed-form entries.
double consistency_triangle(const channels::GadcParams& params, double p,
                            channels::CouplingSign sign = channels::CouplingSign::symmetric);

struct SweepSummary {
    ExperimentConfig config;
    bool ok = false;
    std::string failure;
    double peak_negativity = 0.0;
    double peak_heat_asymmetry = 0.0;
    double asymptotic_q_s = 0.0;
    double asymptotic_q_e = 0.0;
    double max_abs_coherent_s = 0.0;
    double max_abs_coherent_e = 0.0;
    double ratio_mean = 0.0;    // NaN when the proportionality mask is empty
    double ratio_spread = 0.0;  // NaN when the proportionality mask is empty
    std::vector<double> q_s_curve;
    std::vector<double> negativity_curve;
};

/// Runs every config, possibly concurrently; results keep input order and
/// per-config failures are recorded rather than rethrown.
std::vector<SweepSummary> sweep(std::span<const ExperimentConfig> configs, unsigned max_threads = 0);

/// For each summary, true when another successful summary with the same
/// alpha, beta, gamma * t_max and n_samples exists and its Q_S and negativity
/// curves agree pointwise within `tolerance` (curves plotted against
/// gamma t collapse). Summaries without a partner report false.
std::vector<bool> collapse_check(std::span<const SweepSummary> summaries, double tolerance = 1e-8);

}  // namespace strongcouple::experiment
