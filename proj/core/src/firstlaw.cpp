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

#include "strongcouple/firstlaw.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace strongcouple::firstlaw {

using spectra::ComplexMatrix;

std::vector<double> uniform_grid(double t0, double t1, std::size_t n) {
    if (n < 2) throw InputError("uniform_grid: need at least 2 points");
    if (!(t1 > t0)) throw InputError("uniform_grid: empty interval");
    std::vector<double> t(n);
    const double h = (t1 - t0) / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i) t[i] = t0 + h * static_cast<double>(i);
    t.back() = t1;
    return t;
}

std::vector<double> finite_difference(std::span<const double> t, std::span<const double> y) {
    const std::size_t n = t.size();
    if (y.size() != n) throw DimensionError("finite_difference: time and value arrays differ in length");
    if (n < 2) throw InputError("finite_difference: need at least 2 samples");
    std::vector<double> d(n);
    if (n == 2) {
        d[0] = d[1] = (y[1] - y[0]) / (t[1] - t[0]);
        return d;
    }
    // Written on forward differences so constant series give exactly zero.
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double h1 = t[i] - t[i - 1];
        const double h2 = t[i + 1] - t[i];
        d[i] = h1 / (h2 * (h1 + h2)) * (y[i + 1] - y[i]) + h2 / (h1 * (h1 + h2)) * (y[i] - y[i - 1]);
    }
    {
        const double h1 = t[1] - t[0];
        const double h2 = t[2] - t[1];
        d[0] = (h1 + h2) / (h1 * h2) * (y[1] - y[0]) - h1 / (h2 * (h1 + h2)) * (y[2] - y[0]);
    }
    {
        const double h1 = t[n - 2] - t[n - 3];
        const double h2 = t[n - 1] - t[n - 2];
        d[n - 1] = (2.0 * h2 + h1) / (h2 * (h1 + h2)) * (y[n - 1] - y[n - 2]) - h2 / (h1 * (h1 + h2)) * (y[n - 2] - y[n - 3]);
    }
    return d;
}

std::vector<double> cumulative_trapezoid(std::span<const double> t, std::span<const double> f) {
    if (f.size() != t.size()) throw DimensionError("cumulative_trapezoid: time and value arrays differ in length");
    std::vector<double> out(t.size(), 0.0);
    for (std::size_t i = 1; i < t.size(); ++i) out[i] = out[i - 1] + 0.5 * (t[i] - t[i - 1]) * (f[i] + f[i - 1]);
    return out;
}

RealMatrix overlap_probabilities(const SpectralDecomposition& hamiltonian, const SpectralDecomposition& state) {
    if (hamiltonian.size() != state.size()) throw DimensionError("overlap_probabilities: dimension mismatch");
    return (hamiltonian.eigenvectors.adjoint() * state.eigenvectors).cwiseAbs2();
}

std::vector<SpectralDecomposition> eigen_track(std::span<const SpectralDecomposition> samples) {
    if (samples.size() < 2) throw InputError("eigen_track: need at least 2 samples");
    std::vector<SpectralDecomposition> out;
    out.reserve(samples.size());
    out.push_back(samples.front());
    for (std::size_t i = 1; i < samples.size(); ++i) {
        const auto& prev = out.back();
        const auto& cur = samples[i];
        if (cur.size() != prev.size()) throw DimensionError("eigen_track: dimension changes along the trajectory");
        const RealMatrix overlap = (prev.eigenvectors.adjoint() * cur.eigenvectors).cwiseAbs();
        const Eigen::Index d = prev.size();
        std::vector<bool> taken(static_cast<std::size_t>(d), false);
        SpectralDecomposition next{spectra::RealVector(d), ComplexMatrix(d, d)};
        for (Eigen::Index branch = 0; branch < d; ++branch) {
            Eigen::Index best = 0;
            const double best_overlap = overlap.row(branch).maxCoeff(&best);
            if (best_overlap <= kMinBranchOverlap || taken[static_cast<std::size_t>(best)]) {
                std::ostringstream os;
                os << "eigen_track: ambiguous branch match at step " << i << " (branch " << branch
                   << ", best overlap " << best_overlap << "); refine the time grid";
                throw TrackingError(os.str(), i);
            }
            taken[static_cast<std::size_t>(best)] = true;
            next.eigenvalues(branch) = cur.eigenvalues(best);
            next.eigenvectors.col(branch) = cur.eigenvectors.col(best);
        }
        out.push_back(std::move(next));
    }
    return out;
}

std::vector<TrajectorySample> sample_trajectory(std::span<const double> times, const HamiltonianSource& hamiltonian,
                                                const StateSource& state) {
    std::vector<SpectralDecomposition> h_spec;
    std::vector<SpectralDecomposition> rho_spec;
    h_spec.reserve(times.size());
    rho_spec.reserve(times.size());
    for (double t : times) {
        const HermitianOperator h = hamiltonian(t);
        const DensityOperator rho = state(t);
        if (h.dim() != rho.dim()) throw DimensionError("sample_trajectory: Hamiltonian and state dimensions differ");
        h_spec.push_back(spectra::eig_hermitian(h));
        rho_spec.push_back(spectra::eig_hermitian(rho.op()));
    }
    h_spec = eigen_track(h_spec);
    rho_spec = eigen_track(rho_spec);
    std::vector<TrajectorySample> out(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
        out[i].t = times[i];
        out[i].overlaps = overlap_probabilities(h_spec[i], rho_spec[i]);
        out[i].hamiltonian_spectrum = std::move(h_spec[i]);
        out[i].state_spectrum = std::move(rho_spec[i]);
    }
    return out;
}

namespace {

void require_tracked(std::span<const TrajectorySample> traj) {
    if (traj.size() < 2) throw InputError("first-law integral: need at least 2 samples");
    for (std::size_t i = 1; i < traj.size(); ++i) {
        if (!(traj[i].t > traj[i - 1].t)) throw InputError("first-law integral: time grid is not increasing");
        for (const auto member : {&TrajectorySample::hamiltonian_spectrum, &TrajectorySample::state_spectrum}) {
            const auto& a = traj[i - 1].*member;
            const auto& b = traj[i].*member;
            const spectra::RealVector diag = (a.eigenvectors.adjoint() * b.eigenvectors).diagonal().cwiseAbs();
            if (diag.minCoeff() <= kMinBranchOverlap) {
                std::ostringstream os;
                os << "first-law integral: branch discontinuity between samples " << i - 1 << " and " << i
                   << " (input is not eigen-tracked)";
                throw TrackingError(os.str(), i);
            }
        }
    }
}

enum class Channel { work, heat, coherent };

// Pointwise integrand of one first-law channel on the sample grid.
std::vector<double> integrand(std::span<const TrajectorySample> traj, Channel channel) {
    require_tracked(traj);
    const std::size_t n = traj.size();
    const Eigen::Index d = traj.front().state_spectrum.size();
    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) t[i] = traj[i].t;

    // Differentiate one scalar series extracted from the samples.
    auto derivative = [&](auto&& pick) {
        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = pick(traj[i]);
        return finite_difference(t, y);
    };

    std::vector<double> f(n, 0.0);
    for (Eigen::Index a = 0; a < d; ++a) {
        if (channel == Channel::work) {
            const auto dE = derivative([a](const TrajectorySample& s) { return s.hamiltonian_spectrum.eigenvalues(a); });
            for (std::size_t i = 0; i < n; ++i) {
                const auto& s = traj[i];
                f[i] += s.overlaps.row(a).dot(s.state_spectrum.eigenvalues) * dE[i];
            }
        } else if (channel == Channel::heat) {
            const auto drho = derivative([a](const TrajectorySample& s) { return s.state_spectrum.eigenvalues(a); });
            for (std::size_t i = 0; i < n; ++i) {
                const auto& s = traj[i];
                f[i] += s.overlaps.col(a).dot(s.hamiltonian_spectrum.eigenvalues) * drho[i];
            }
        } else {
            for (Eigen::Index k = 0; k < d; ++k) {
                const auto dP = derivative([a, k](const TrajectorySample& s) { return s.overlaps(a, k); });
                for (std::size_t i = 0; i < n; ++i) {
                    const auto& s = traj[i];
                    f[i] += s.hamiltonian_spectrum.eigenvalues(a) * s.state_spectrum.eigenvalues(k) * dP[i];
                }
            }
        }
    }
    return f;
}

std::vector<double> cumulative(std::span<const TrajectorySample> traj, Channel channel) {
    const auto f = integrand(traj, channel);
    std::vector<double> t(traj.size());
    for (std::size_t i = 0; i < traj.size(); ++i) t[i] = traj[i].t;
    return cumulative_trapezoid(t, f);
}

double internal_energy(const HermitianOperator& h, const DensityOperator& rho) {
    if (h.dim() != rho.dim()) throw DimensionError("internal energy: Hamiltonian and state dimensions differ");
    return (h.matrix() * rho.matrix()).trace().real();
}

}  // namespace

std::vector<double> work_integral(std::span<const TrajectorySample> traj) { return cumulative(traj, Channel::work); }

std::vector<double> heat_integral(std::span<const TrajectorySample> traj) { return cumulative(traj, Channel::heat); }

std::vector<double> coherent_energy_integral(std::span<const TrajectorySample> traj) {
    return cumulative(traj, Channel::coherent);
}

double internal_energy_change(const HermitianOperator& h, const DensityOperator& rho_t, const DensityOperator& rho_0) {
    if (rho_t.dim() != rho_0.dim()) throw DimensionError("internal_energy_change: state dimensions differ");
    return internal_energy(h, rho_t) - internal_energy(h, rho_0);
}

ThermoTrajectory thermo_trajectory(std::span<const double> times, const HamiltonianSource& hamiltonian,
                                   const StateSource& state, const IntegratorSettings& settings) {
    if (times.size() < 3) throw InputError("thermo_trajectory: need at least 3 grid points");
    if (settings.endpoint_subdivision < 1) throw InputError("thermo_trajectory: endpoint_subdivision must be >= 1");

    const auto samples = sample_trajectory(times, hamiltonian, state);
    const std::size_t n = times.size();

    ThermoTrajectory out;
    out.times.assign(times.begin(), times.end());
    std::vector<double>* series[] = {&out.work, &out.heat, &out.coherent_energy};
    const Channel channels[] = {Channel::work, Channel::heat, Channel::coherent};

    std::vector<TrajectorySample> head;
    if (settings.endpoint_subdivision >= 2) {
        const auto sub = uniform_grid(times[0], times[1], static_cast<std::size_t>(settings.endpoint_subdivision) + 1);
        head = sample_trajectory(sub, hamiltonian, state);
    }

    for (int c = 0; c < 3; ++c) {
        const auto f = integrand(samples, channels[c]);
        auto& acc = *series[c];
        acc.assign(n, 0.0);
        if (!head.empty()) {
            acc[1] = cumulative(head, channels[c]).back();
        } else {
            acc[1] = 0.5 * (times[1] - times[0]) * (f[0] + f[1]);
        }
        for (std::size_t i = 2; i < n; ++i) acc[i] = acc[i - 1] + 0.5 * (times[i] - times[i - 1]) * (f[i] + f[i - 1]);
    }

    out.internal_energy_change.resize(n);
    out.closure_residual.resize(n);
    const double u0 = internal_energy(hamiltonian(times[0]), state(times[0]));
    for (std::size_t i = 0; i < n; ++i) {
        out.internal_energy_change[i] = i == 0 ? 0.0 : internal_energy(hamiltonian(times[i]), state(times[i])) - u0;
        out.closure_residual[i] =
            std::abs(out.internal_energy_change[i] - (out.work[i] + out.heat[i] + out.coherent_energy[i]));
    }
    return out;
}

double first_law_closure(const ThermoTrajectory& traj) {
    double worst = 0.0;
    for (std::size_t i = 0; i < traj.times.size(); ++i) {
        worst = std::max(worst, std::abs(traj.internal_energy_change[i] -
                                         (traj.work[i] + traj.heat[i] + traj.coherent_energy[i])));
    }
    return worst;
}

void require_closure(const ThermoTrajectory& traj, double tolerance, const char* label) {
    const double residual = first_law_closure(traj);
    if (residual > tolerance) {
        std::ostringstream os;
        os << label << ": first-law closure residual " << residual << " exceeds tolerance " << tolerance;
        throw ClosureError(os.str(), residual);
    }
}

}  // namespace strongcouple::firstlaw
