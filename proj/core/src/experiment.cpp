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

#include "strongcouple/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>
#include <thread>

namespace strongcouple::experiment {

using channels::CouplingSign;
using channels::GadcParams;
using spectra::ComplexMatrix;
using spectra::DensityOperator;

namespace {

[[noreturn]] void bad_config(const char* field, const std::string& rule, double value) {
    std::ostringstream os;
    os.precision(17);
    os << "config." << field << ": " << rule << ", got " << value;
    throw InputError(os.str());
}

double max_abs(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

void ExperimentConfig::validate() const {
    if (!(alpha >= 0.0 && alpha <= 1.0)) bad_config("alpha", "must lie in [0, 1]", alpha);
    if (!(beta > 0.0) || !std::isfinite(beta)) bad_config("beta", "must be positive and finite", beta);
    if (!(gamma > 0.0) || !std::isfinite(gamma)) bad_config("gamma", "must be positive and finite", gamma);
    if (!(t_max > 0.0) || !std::isfinite(t_max)) bad_config("t_max", "must be positive and finite", t_max);
    if (n_samples < 3) bad_config("n_samples", "must be at least 3", static_cast<double>(n_samples));
    if (integrator.endpoint_subdivision < 1) {
        bad_config("integrator.endpoint_subdivision", "must be at least 1", integrator.endpoint_subdivision);
    }
    if (!(integrator.closure_tolerance > 0.0)) {
        bad_config("integrator.closure_tolerance", "must be positive", integrator.closure_tolerance);
    }
}

GadcParams ExperimentConfig::params() const {
    validate();
    return GadcParams::from_beta(alpha, beta, gamma);
}

std::vector<double> ExperimentConfig::grid() const {
    validate();
    return firstlaw::uniform_grid(0.0, t_max, n_samples);
}

double consistency_triangle(const GadcParams& params, double p, CouplingSign sign) {
    GadcParams at_p = params;
    at_p.p = p;
    const DensityOperator joint = channels::joint_state_at_p(params, p, sign);

    const auto kraus_s = channels::apply_channel(channels::system_kraus(at_p), params.initial_system_state());
    const auto trace_s = spectra::partial_trace(joint.matrix(), spectra::Subsystem::first, {2, 2});
    const auto closed_s = channels::system_output(params, p);

    const auto kraus_e = channels::apply_channel(channels::environment_kraus(at_p), params.initial_environment_state());
    const auto trace_e = spectra::partial_trace(joint.matrix(), spectra::Subsystem::second, {2, 2});
    const auto closed_e = channels::environment_output(params, p);

    return std::max({spectra::max_abs_diff(kraus_s.matrix(), trace_s), spectra::max_abs_diff(kraus_s.matrix(), closed_s.matrix()),
                     spectra::max_abs_diff(trace_s, closed_s.matrix()), spectra::max_abs_diff(kraus_e.matrix(), trace_e),
                     spectra::max_abs_diff(kraus_e.matrix(), closed_e.matrix()),
                     spectra::max_abs_diff(trace_e, closed_e.matrix())});
}

std::vector<MarkovRow> markov_convergence(const ExperimentConfig& config, double t, std::span<const int> step_counts) {
    const GadcParams params = config.params();
    if (step_counts.empty()) throw InputError("markov_convergence: no step counts given");
    const int smallest = *std::min_element(step_counts.begin(), step_counts.end());
    if (smallest < 1) throw InputError("markov_convergence: step counts must be >= 1");
    if (params.gamma_rate * t / smallest > 1.0) {
        std::ostringstream os;
        os << "markov_convergence: gamma * t / n = " << params.gamma_rate * t / smallest << " exceeds 1 for n = " << smallest;
        throw InputError(os.str());
    }
    const ComplexMatrix target = channels::system_state(params, t).matrix();
    std::vector<MarkovRow> rows;
    rows.reserve(step_counts.size());
    for (int n : step_counts) {
        const auto iterate = channels::iterate_map_check(params, t, n);
        rows.push_back({n, params.gamma_rate * t / n, spectra::max_abs_diff(iterate.matrix(), target)});
    }
    return rows;
}

ExperimentResult run(const ExperimentConfig& config) {
    const GadcParams params = config.params();
    const std::vector<double> times = config.grid();
    const std::size_t n = times.size();

    ExperimentResult result;
    result.config = config;

    const auto h_s = params.system_hamiltonian();
    const auto h_e = params.environment_hamiltonian();
    result.thermo_s = firstlaw::thermo_trajectory(
        times, [&](double) { return h_s; }, [&](double t) { return channels::system_state(params, t); },
        config.integrator);
    result.thermo_e = firstlaw::thermo_trajectory(
        times, [&](double) { return h_e; }, [&](double t) { return channels::environment_state(params, t); },
        config.integrator);

    auto& info = result.info;
    auto& diag = result.diagnostics;
    info.times = times;
    diag.energy_imbalance.resize(n);
    diag.triangle_deviation.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = times[i];
        const auto rho_s = channels::system_state(params, t);
        const auto rho_e = channels::environment_state(params, t);
        const auto joint = channels::joint_state(params, t);
        info.entropy_s.push_back(info::von_neumann_entropy(rho_s));
        info.entropy_e.push_back(info::von_neumann_entropy(rho_e));
        info.entropy_se.push_back(info::von_neumann_entropy(joint));
        info.coherence_s.push_back(info::l1_coherence(rho_s));
        info.coherence_e.push_back(info::l1_coherence(rho_e));
        info.negativity.push_back(info::negativity(joint));
        info.mutual_information.push_back(info::mutual_information(joint));
        diag.energy_imbalance[i] = result.thermo_s.internal_energy_change[i] + result.thermo_e.internal_energy_change[i];
        diag.triangle_deviation[i] = consistency_triangle(params, channels::p_of_t(params.gamma_rate, t));
    }
    info.heat_asymmetry = info::heat_asymmetry(result.thermo_s.heat, result.thermo_e.heat);

    diag.closure_residual_s = firstlaw::first_law_closure(result.thermo_s);
    diag.closure_residual_e = firstlaw::first_law_closure(result.thermo_e);
    diag.max_abs_work = std::max(max_abs(result.thermo_s.work), max_abs(result.thermo_e.work));
    diag.max_energy_imbalance = max_abs(diag.energy_imbalance);
    diag.max_triangle_deviation = *std::max_element(diag.triangle_deviation.begin(), diag.triangle_deviation.end());
    {
        const auto ds = firstlaw::finite_difference(times, info.entropy_s);
        const auto de = firstlaw::finite_difference(times, info.entropy_e);
        for (std::size_t i = 0; i < n; ++i) {
            diag.max_entropy_rate_imbalance = std::max(diag.max_entropy_rate_imbalance, std::abs(ds[i] + de[i]));
        }
    }

    // Markov check at gamma t = 1, clipped to the simulated window.
    diag.markov_time = std::min(1.0 / params.gamma_rate, config.t_max);
    const int steps[] = {10, 100, 1000};
    diag.markov = markov_convergence(config, diag.markov_time, steps);

    if (diag.max_abs_work > 1e-12) {
        std::ostringstream os;
        os << "run: work should vanish for static Hamiltonians, got |W| = " << diag.max_abs_work;
        throw NumericalError(os.str());
    }
    if (diag.max_energy_imbalance > 1e-10) {
        std::ostringstream os;
        os << "run: dU_S + dU_E = " << diag.max_energy_imbalance << " exceeds 1e-10";
        throw NumericalError(os.str());
    }
    firstlaw::require_closure(result.thermo_s, config.integrator.closure_tolerance, "system");
    firstlaw::require_closure(result.thermo_e, config.integrator.closure_tolerance, "environment");
    return result;
}

namespace {

SweepSummary summarize(const ExperimentConfig& config) {
    SweepSummary s;
    s.config = config;
    try {
        const ExperimentResult r = run(config);
        const auto& info = r.info;
        s.peak_negativity = *std::max_element(info.negativity.begin(), info.negativity.end());
        s.peak_heat_asymmetry = *std::max_element(info.heat_asymmetry.begin(), info.heat_asymmetry.end());
        s.asymptotic_q_s = r.thermo_s.heat.back();
        s.asymptotic_q_e = r.thermo_e.heat.back();
        s.max_abs_coherent_s = max_abs(r.thermo_s.coherent_energy);
        s.max_abs_coherent_e = max_abs(r.thermo_e.coherent_energy);
        try {
            const auto rep = info::proportionality_report(info.heat_asymmetry, info.negativity);
            s.ratio_mean = rep.ratio_mean;
            s.ratio_spread = rep.ratio_relative_spread;
        } catch (const InputError&) {
            s.ratio_mean = s.ratio_spread = std::numeric_limits<double>::quiet_NaN();
        }
        s.q_s_curve = r.thermo_s.heat;
        s.negativity_curve = info.negativity;
        s.ok = true;
    } catch (const Error& e) {
        s.failure = e.what();
    }
    return s;
}

}  // namespace

std::vector<SweepSummary> sweep(std::span<const ExperimentConfig> configs, unsigned max_threads) {
    std::vector<SweepSummary> out(configs.size());
    if (max_threads == 0) max_threads = std::max(1u, std::thread::hardware_concurrency());
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(max_threads, configs.size()));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < configs.size(); i = next++) out[i] = summarize(configs[i]);
    };
    if (workers <= 1) {
        work();
        return out;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    return out;
}

std::vector<bool> collapse_check(std::span<const SweepSummary> summaries, double tolerance) {
    std::vector<bool> flags(summaries.size(), false);
    auto same_axis = [](const ExperimentConfig& a, const ExperimentConfig& b) {
        return a.alpha == b.alpha && a.beta == b.beta && a.n_samples == b.n_samples &&
               std::abs(a.gamma * a.t_max - b.gamma * b.t_max) <= 1e-12 * std::max(1.0, a.gamma * a.t_max);
    };
    auto curves_match = [tolerance](const SweepSummary& a, const SweepSummary& b) {
        for (std::size_t i = 0; i < a.q_s_curve.size(); ++i) {
            if (std::abs(a.q_s_curve[i] - b.q_s_curve[i]) > tolerance) return false;
            if (std::abs(a.negativity_curve[i] - b.negativity_curve[i]) > tolerance) return false;
        }
        return true;
    };
    for (std::size_t i = 0; i < summaries.size(); ++i) {
        if (!summaries[i].ok) continue;
        bool partner = false;
        bool all_match = true;
        for (std::size_t j = 0; j < summaries.size(); ++j) {
            if (i == j || !summaries[j].ok || summaries[i].config.gamma == summaries[j].config.gamma) continue;
            if (!same_axis(summaries[i].config, summaries[j].config)) continue;
            partner = true;
            all_match = all_match && curves_match(summaries[i], summaries[j]);
        }
        flags[i] = partner && all_match;
    }
    return flags;
}

}  // namespace strongcouple::experiment
