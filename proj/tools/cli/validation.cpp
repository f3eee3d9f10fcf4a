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

#include "validation.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "random_states.hpp"
#include "strongcouple/experiment.hpp"

namespace strongcouple::cli {

using channels::GadcParams;
using spectra::ComplexMatrix;
using spectra::DensityOperator;
using spectra::HermitianOperator;

namespace {

class Collector {
public:
    explicit Collector(std::vector<CheckResult>& out) : out_(out) {}

    void at_most(const std::string& suite, const std::string& name, double observed, double bound) {
        std::ostringstream os;
        os << "observed " << observed << ", expected <= " << bound;
        out_.push_back({suite, name, observed <= bound, false, os.str()});
    }

    void within(const std::string& suite, const std::string& name, double observed, double lo, double hi) {
        std::ostringstream os;
        os.precision(6);
        os << "observed " << observed << ", expected in [" << lo << ", " << hi << "]";
        out_.push_back({suite, name, observed >= lo && observed <= hi, false, os.str()});
    }

    void expect(const std::string& suite, const std::string& name, bool ok, const std::string& detail) {
        out_.push_back({suite, name, ok, false, detail});
    }

    void note(const std::string& suite, const std::string& name, bool ok, const std::string& detail) {
        out_.push_back({suite, name, ok, true, detail});
    }

    // Runs `body`; an escaping library error becomes a failed check.
    template <class F>
    void guarded(const std::string& suite, const std::string& name, F&& body) {
        try {
            body();
        } catch (const Error& e) {
            out_.push_back({suite, name, false, false, std::string("error: ") + e.what()});
        }
    }

private:
    std::vector<CheckResult>& out_;
};

GadcParams random_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    GadcParams g;
    g.alpha = unit(rng);
    g.p = unit(rng);
    g.w0 = unit(rng);
    g.w1 = 1.0 - g.w0;
    return g;
}

void spectra_suite(Collector& c, std::mt19937_64& rng) {
    const std::string suite = "spectra";
    c.guarded(suite, "eigendecomposition", [&] {
        double recon = 0.0, ortho = 0.0, trace = 0.0;
        for (int trial = 0; trial < 60; ++trial) {
            const Eigen::Index dim = 2 + trial % 7;
            const HermitianOperator h(random_hermitian(rng, dim));
            const auto spec = spectra::eig_hermitian(h);
            recon = std::max(recon, spectra::max_abs_diff(spec.reconstruct(), h.matrix()));
            ortho = std::max(ortho, spectra::max_abs_diff(spec.eigenvectors.adjoint() * spec.eigenvectors,
                                                          ComplexMatrix::Identity(dim, dim)));
            trace = std::max(trace, std::abs(spec.eigenvalues.sum() - h.trace()));
        }
        c.at_most(suite, "reconstruction residual (60 random Hermitian, dim 2-8)", recon, 1e-10);
        c.at_most(suite, "eigenvector orthonormality", ortho, 1e-10);
        c.at_most(suite, "eigenvalue sum vs trace", trace, 1e-10);
    });
    c.guarded(suite, "bipartite maps", [&] {
        double ptrace = 0.0, involution = 0.0, norm = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const auto a = random_density(rng, 2);
            const auto b = random_density(rng, 2 + trial % 3);
            const spectra::BipartiteDims dims{2, b.dim()};
            const DensityOperator joint(spectra::tensor_product(a.matrix(), b.matrix()));
            ptrace = std::max({ptrace,
                               spectra::max_abs_diff(spectra::partial_trace(joint, spectra::Subsystem::first, dims).matrix(), a.matrix()),
                               spectra::max_abs_diff(spectra::partial_trace(joint, spectra::Subsystem::second, dims).matrix(), b.matrix())});
            const auto pt = spectra::partial_transpose(joint.op(), spectra::Subsystem::first, dims);
            involution = std::max(involution, spectra::max_abs_diff(
                                                  spectra::partial_transpose(pt, spectra::Subsystem::first, dims).matrix(),
                                                  joint.matrix()));
            norm = std::max(norm, std::abs(spectra::trace_norm(joint.op()) - 1.0));
        }
        c.at_most(suite, "partial trace recovers product factors", ptrace, 1e-12);
        c.at_most(suite, "partial transpose is an involution", involution, 0.0);
        c.at_most(suite, "trace norm of density operators is 1", norm, 1e-10);
    });
}

void channels_suite(Collector& c, std::mt19937_64& rng, const ValidateOptions& opt) {
    const std::string suite = "channels";
    c.guarded(suite, "system kraus completeness", [&] {
        double defect = 0.0;
        for (int i = 0; i <= 100; ++i) {
            GadcParams g = GadcParams::from_beta(0.5, 1.0);
            g.p = i / 100.0;
            defect = std::max(defect, channels::system_kraus(g).completeness_defect());
        }
        c.at_most(suite, "system Kraus sum K^dagger K = I (101 values of p)", defect, channels::kCompletenessTolerance);
    });
    c.guarded(suite, "system channel trace and positivity", [&] {
        double trace = 0.0, min_eig = 0.0;
        for (int trial = 0; trial < 1000; ++trial) {
            const auto g = random_params(rng);
            const auto out = channels::apply_channel(channels::system_kraus(g), random_density(rng, 2));
            trace = std::max(trace, std::abs(out.op().trace() - 1.0));
            min_eig = std::min(min_eig, spectra::eig_hermitian(out.op()).eigenvalues(0));
        }
        c.at_most(suite, "system channel trace preservation (1000 random inputs)", trace, 1e-10);
        c.at_most(suite, "system channel positivity (most negative eigenvalue, negated)", std::max(0.0, -min_eig), 1e-10);
    });
    c.guarded(suite, "consistency triangle", [&] {
        double worst = 0.0;
        for (int trial = 0; trial < 20; ++trial) {
            const auto g = random_params(rng);
            worst = std::max(worst, experiment::consistency_triangle(g, g.p, opt.coupling_sign));
        }
        c.at_most(suite, "Kraus / partial-trace / closed-form routes agree (20 random triples)", worst, 1e-12);
    });
    c.guarded(suite, "markov limit", [&] {
        const experiment::ExperimentConfig cfg;
        const int steps[] = {10, 100, 1000};
        const auto rows = experiment::markov_convergence(cfg, 1.0, steps);
        const bool decreasing = rows[0].deviation > rows[1].deviation && rows[1].deviation > rows[2].deviation;
        std::ostringstream os;
        for (const auto& r : rows) os << "n=" << r.steps << ": " << r.deviation << "  ";
        c.expect(suite, "iterated channel converges to closed form (strictly decreasing)", decreasing, os.str());
        c.at_most(suite, "iterated channel deviation at n=1000", rows[2].deviation, 1e-3);
    });
}

void firstlaw_suite(Collector& c, const ValidateOptions& opt) {
    const std::string suite = "firstlaw";
    c.guarded(suite, "closure", [&] {
        experiment::ExperimentConfig cfg;
        cfg.n_samples = opt.n_samples;
        cfg.integrator.closure_tolerance = opt.closure_tolerance;
        const auto params = cfg.params();
        const auto grid = cfg.grid();
        const auto h_s = params.system_hamiltonian();
        const auto h_e = params.environment_hamiltonian();
        const auto ts = firstlaw::thermo_trajectory(
            grid, [&](double) { return h_s; }, [&](double t) { return channels::system_state(params, t); },
            cfg.integrator);
        const auto te = firstlaw::thermo_trajectory(
            grid, [&](double) { return h_e; }, [&](double t) { return channels::environment_state(params, t); },
            cfg.integrator);
        const std::string grid_note = " (" + std::to_string(opt.n_samples) + " points)";
        c.at_most(suite, "system closure dU = W + Q + C" + grid_note, firstlaw::first_law_closure(ts),
                  opt.closure_tolerance);
        c.at_most(suite, "environment closure dU = W + Q + C" + grid_note, firstlaw::first_law_closure(te),
                  opt.closure_tolerance);
        double work = 0.0, energy = 0.0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            work = std::max({work, std::abs(ts.work[i]), std::abs(te.work[i])});
            energy = std::max(energy, std::abs(ts.internal_energy_change[i] + te.internal_energy_change[i]));
        }
        c.at_most(suite, "zero work for static Hamiltonians", work, 1e-12);
        c.at_most(suite, "energy conservation dU_S + dU_E", energy, 1e-10);
    });
}

void info_suite(Collector& c, std::mt19937_64& rng) {
    const std::string suite = "infomeasures";
    c.guarded(suite, "negativity routes", [&] {
        double worst = 0.0;
        for (int trial = 0; trial < 200; ++trial) {
            const auto rho = random_density(rng, 4, 1 + trial % 4);
            const auto pt = spectra::partial_transpose(rho.op(), spectra::Subsystem::first, {2, 2});
            const auto ev = spectra::eig_hermitian(pt).eigenvalues;
            double negatives = 0.0;
            for (Eigen::Index i = 0; i < ev.size(); ++i) negatives += std::max(0.0, -ev(i));
            worst = std::max(worst, std::abs(0.5 * (spectra::trace_norm(pt) - 1.0) - negatives));
        }
        c.at_most(suite, "negativity: trace-norm vs negative-eigenvalue route (200 random states)", worst, 1e-10);
    });
    c.guarded(suite, "entropy invariance", [&] {
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            const auto rho = random_density(rng, 2 + trial % 3);
            const ComplexMatrix u = random_unitary(rng, rho.dim());
            const DensityOperator rotated(ComplexMatrix(u * rho.matrix() * u.adjoint()));
            worst = std::max(worst, std::abs(info::von_neumann_entropy(rho) - info::von_neumann_entropy(rotated)));
        }
        c.at_most(suite, "entropy invariant under unitary conjugation", worst, 1e-10);
    });
    c.guarded(suite, "mutual information", [&] {
        double lowest = 0.0;
        for (int trial = 0; trial < 200; ++trial) {
            lowest = std::min(lowest, info::mutual_information(random_density(rng, 4, 1 + trial % 4)));
        }
        c.at_most(suite, "mutual information is non-negative (most negative value, negated)", std::max(0.0, -lowest),
                  1e-10);
    });
    c.guarded(suite, "coherence closed forms", [&] {
        const auto g = GadcParams::from_beta(1.0 / std::sqrt(2.0), 1.0);
        double worst = 0.0;
        for (double t : firstlaw::uniform_grid(0.0, 10.0, 201)) {
            worst = std::max({worst, std::abs(info::l1_coherence(channels::system_state(g, t)) - std::exp(-t / 2)),
                              std::abs(info::l1_coherence(channels::environment_state(g, t)) - std::sqrt(-std::expm1(-t)))});
        }
        c.at_most(suite, "l1 coherence matches exp(-t/2) and sqrt(1-exp(-t))", worst, 1e-10);
    });
}

void reference_suite(Collector& c) {
    const std::string suite = "reference";
    c.guarded(suite, "reference values", [&] {
        const experiment::ExperimentConfig cfg;
        const auto params = cfg.params();
        c.within(suite, "thermal weight w0 at beta = 1/gap", params.w0, 0.7305, 0.7315);
        c.within(suite, "environment entropy S(rho_E(0)) in bits",
                 info::von_neumann_entropy(params.initial_environment_state()), 0.835, 0.845);
        const auto result = experiment::run(cfg);
        c.within(suite, "asymptotic system heat Q_S(10)", result.thermo_s.heat.back(), 0.102, 0.106);
        c.within(suite, "asymptotic environment heat Q_E(10)", result.thermo_e.heat.back(), -0.106, -0.102);
    });
}

void model_notes(Collector& c, const ValidateOptions& opt) {
    const std::string suite = "model";
    c.guarded(suite, "coupling matrix", [&] {
        const double defect = channels::unitarity_defect(channels::gadc_unitary(0.5, opt.coupling_sign));
        std::ostringstream os;
        os << "||U U^dagger - I||_max at p=0.5 is " << defect;
        c.note(suite, "joint evolution matrix is unitary", defect <= 1e-12, os.str());

        auto g = GadcParams::from_beta(1.0 / std::sqrt(2.0), 1.0);
        g.p = 0.5;
        const double completeness = channels::environment_kraus(g).completeness_defect();
        std::ostringstream os2;
        os2 << "||sum L^dagger L - I||_max at p=0.5, alpha=1/sqrt(2) is " << completeness;
        c.note(suite, "environment Kraus operators are trace preserving", completeness <= 1e-10, os2.str());

        double lo = 1e300, hi = -1e300;
        for (double t : firstlaw::uniform_grid(0.0, 10.0, 201)) {
            const double s = info::von_neumann_entropy(channels::joint_state(g, t, opt.coupling_sign));
            lo = std::min(lo, s);
            hi = std::max(hi, s);
        }
        std::ostringstream os3;
        os3 << "joint entropy ranges over [" << lo << ", " << hi << "] bits";
        c.note(suite, "joint entropy is constant in time", hi - lo <= 1e-10, os3.str());
    });
}

}  // namespace

std::vector<CheckResult> run_validation(const ValidateOptions& options) {
    std::vector<CheckResult> out;
    Collector c(out);
    std::mt19937_64 rng(options.seed);
    spectra_suite(c, rng);
    channels_suite(c, rng, options);
    firstlaw_suite(c, options);
    info_suite(c, rng);
    reference_suite(c);
    model_notes(c, options);
    return out;
}

int report_validation(const std::vector<CheckResult>& checks, bool strict, std::ostream& out) {
    int failures = 0;
    for (const auto& check : checks) {
        const bool counts = !check.note || strict;
        const char* tag = check.passed ? "PASS" : (counts ? "FAIL" : "NOTE");
        if (!check.passed && counts) ++failures;
        out << "[" << tag << "] " << check.suite << ": " << check.name << " -- " << check.detail << "\n";
    }
    out << (failures == 0 ? "validation passed" : "validation failed") << " (" << checks.size() << " checks, "
        << failures << " failures)\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace strongcouple::cli
