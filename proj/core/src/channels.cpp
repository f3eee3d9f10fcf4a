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

#include "strongcouple/channels.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace strongcouple::channels {

using spectra::Complex;

namespace {

[[noreturn]] void bad_field(const char* field, const std::string& rule, double value) {
    std::ostringstream os;
    os.precision(17);
    os << "GadcParams." << field << ": " << rule << ", got " << value;
    throw InputError(os.str());
}

bool in_unit_interval(double x) { return x >= 0.0 && x <= 1.0; }

void require_probability(double p) {
    if (!in_unit_interval(p)) bad_field("p", "must lie in [0, 1]", p);
}

// Entries of the 2x2 outputs, parameterized by the decay factor (1 - p) and p
// separately so time-dependent callers can pass exp(-Gt) and -expm1(-Gt)
// without cancellation.
struct QubitEntries {
    double d0, d1, off;
};

QubitEntries system_entries(const GadcParams& g, double p, double q) {
    const double a2 = g.alpha * g.alpha;
    const double b2 = 1.0 - a2;
    return {(a2 + b2 * p) * g.w0 + a2 * q * g.w1,
            b2 * q * g.w0 + (b2 + a2 * p) * g.w1,
            g.alpha * g.alpha_bar() * std::sqrt(q)};
}

QubitEntries environment_entries(const GadcParams& g, double p, double q) {
    const double a2 = g.alpha * g.alpha;
    const double b2 = 1.0 - a2;
    return {(a2 + b2 * q) * g.w0 + a2 * p * g.w1,
            b2 * p * g.w0 + (b2 + a2 * q) * g.w1,
            g.alpha * g.alpha_bar() * std::sqrt(p)};
}

DensityOperator to_density(const QubitEntries& e) {
    ComplexMatrix m(2, 2);
    m << e.d0, e.off, e.off, e.d1;
    return DensityOperator(m);
}

std::pair<double, double> eigenvalues_of(const QubitEntries& e) {
    const double half_trace = 0.5 * (e.d0 + e.d1);
    const double radius = 0.5 * std::hypot(e.d0 - e.d1, 2.0 * e.off);
    return {half_trace - radius, half_trace + radius};
}

struct Decay {
    double p, q;  // p = 1 - exp(-G t), q = exp(-G t)
};

Decay decay_at(const GadcParams& g, double t) {
    p_of_t(g.gamma_rate, t);  // validation
    return {-std::expm1(-g.gamma_rate * t), std::exp(-g.gamma_rate * t)};
}

}  // namespace

GadcParams GadcParams::from_beta(double alpha, double beta_gap, double gamma_rate, double p) {
    if (!(beta_gap > 0.0) || !std::isfinite(beta_gap)) bad_field("beta", "must be positive and finite", beta_gap);
    GadcParams g;
    g.p = p;
    g.alpha = alpha;
    g.gamma_rate = gamma_rate;
    g.w0 = 1.0 / (1.0 + std::exp(-beta_gap));
    g.w1 = 1.0 - g.w0;
    g.validate();
    return g;
}

void GadcParams::validate() const {
    require_probability(p);
    if (!in_unit_interval(w0)) bad_field("w0", "must lie in [0, 1]", w0);
    if (!in_unit_interval(w1)) bad_field("w1", "must lie in [0, 1]", w1);
    if (std::abs(w0 + w1 - 1.0) > 1e-12) bad_field("w1", "w0 + w1 must equal 1", w0 + w1);
    if (!in_unit_interval(alpha)) bad_field("alpha", "must lie in [0, 1]", alpha);
    if (!(gamma_rate > 0.0) || !std::isfinite(gamma_rate)) bad_field("gamma_rate", "must be positive and finite", gamma_rate);
    for (double e : {e_g, e_e, e_0, e_1}) {
        if (!std::isfinite(e)) bad_field("energy", "must be finite", e);
    }
    if (std::abs((e_1 - e_0) - (e_e - e_g)) > 1e-12) {
        bad_field("e_1", "environment gap E1 - E0 must equal system gap Ee - Eg", e_1 - e_0);
    }
}

double GadcParams::alpha_bar() const { return std::sqrt(std::max(0.0, 1.0 - alpha * alpha)); }

HermitianOperator GadcParams::system_hamiltonian() const {
    return HermitianOperator::diagonal(Eigen::Vector2d(e_g, e_e));
}

HermitianOperator GadcParams::environment_hamiltonian() const {
    return HermitianOperator::diagonal(Eigen::Vector2d(e_0, e_1));
}

DensityOperator GadcParams::initial_system_state() const {
    return DensityOperator::pure(Eigen::Vector2cd(alpha, alpha_bar()));
}

DensityOperator GadcParams::initial_environment_state() const {
    return DensityOperator(HermitianOperator::diagonal(Eigen::Vector2d(w0, w1)));
}

DensityOperator GadcParams::initial_joint_state() const {
    return DensityOperator(
        spectra::tensor_product(initial_system_state().matrix(), initial_environment_state().matrix()));
}

ComplexMatrix gadc_unitary(double p, CouplingSign sign) {
    require_probability(p);
    const double c = std::sqrt(1.0 - p);
    const double s = std::sqrt(p);
    ComplexMatrix u = ComplexMatrix::Identity(4, 4);
    u(1, 1) = c;
    u(2, 2) = c;
    u(2, 1) = s;  // |g,E1> -> sqrt(p) |e,E0>
    u(1, 2) = sign == CouplingSign::symmetric ? s : -s;
    return u;
}

double unitarity_defect(const ComplexMatrix& u) {
    return (u * u.adjoint() - ComplexMatrix::Identity(u.rows(), u.rows())).cwiseAbs().maxCoeff();
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> operators, std::string label)
    : KrausChannel(std::move(operators), std::move(label), true) {}

KrausChannel KrausChannel::unchecked(std::vector<ComplexMatrix> operators, std::string label) {
    return KrausChannel(std::move(operators), std::move(label), false);
}

KrausChannel::KrausChannel(std::vector<ComplexMatrix> operators, std::string label, bool enforce)
    : ops_(std::move(operators)), label_(std::move(label)) {
    if (ops_.empty()) throw DimensionError("KrausChannel '" + label_ + "': no operators");
    const auto rows = ops_.front().rows();
    const auto cols = ops_.front().cols();
    ComplexMatrix sum = ComplexMatrix::Zero(cols, cols);
    for (const auto& k : ops_) {
        spectra::require_finite(k, "KrausChannel");
        if (k.rows() != rows || k.cols() != cols) {
            throw DimensionError("KrausChannel '" + label_ + "': operators differ in shape");
        }
        sum += k.adjoint() * k;
    }
    defect_ = (sum - ComplexMatrix::Identity(cols, cols)).cwiseAbs().maxCoeff();
    if (enforce && defect_ > kCompletenessTolerance) {
        std::ostringstream os;
        os << "KrausChannel '" << label_ << "': ||sum K^dagger K - I||_max = " << defect_;
        throw ChannelError(os.str());
    }
}

KrausChannel system_kraus(const GadcParams& params) {
    params.validate();
    const double c = std::sqrt(1.0 - params.p);
    const double s = std::sqrt(params.p);
    const double r0 = std::sqrt(params.w0);
    const double r1 = std::sqrt(params.w1);
    ComplexMatrix k00(2, 2), k01(2, 2), k10(2, 2), k11(2, 2);
    k00 << r0, 0.0, 0.0, r0 * c;
    k01 << 0.0, r0 * s, 0.0, 0.0;
    k10 << 0.0, 0.0, r1 * s, 0.0;
    k11 << r1 * c, 0.0, 0.0, r1;
    return KrausChannel({k00, k01, k10, k11}, "gadc-system");
}

KrausChannel environment_kraus(const GadcParams& params) {
    params.validate();
    const double c = std::sqrt(1.0 - params.p);
    const double s = std::sqrt(params.p);
    const double a = params.alpha;
    const double b = params.alpha_bar();
    ComplexMatrix l0(2, 2), l1(2, 2);
    l0 << a, 0.0, b * s, a * c;
    l1 << b * c, a * s, 0.0, b;
    return KrausChannel::unchecked({l0, l1}, "gadc-environment");
}

DensityOperator apply_channel(const KrausChannel& channel, const DensityOperator& rho) {
    if (rho.dim() != channel.input_dim()) {
        std::ostringstream os;
        os << "apply_channel: channel '" << channel.label() << "' expects dimension " << channel.input_dim()
           << ", state has " << rho.dim();
        throw DimensionError(os.str());
    }
    ComplexMatrix out = ComplexMatrix::Zero(channel.output_dim(), channel.output_dim());
    for (const auto& k : channel.operators()) out += k * rho.matrix() * k.adjoint();
    if (!channel.trace_preserving()) {
        const double tr = out.trace().real();
        if (std::abs(tr - 1.0) > spectra::kTraceTolerance) {
            std::ostringstream os;
            os.precision(17);
            os << "apply_channel: channel '" << channel.label() << "' is not trace preserving (completeness defect "
               << channel.completeness_defect() << "); output trace " << tr;
            throw ChannelError(os.str());
        }
    }
    return DensityOperator(out);
}

double p_of_t(double gamma_rate, double t) {
    if (!(gamma_rate > 0.0) || !std::isfinite(gamma_rate)) bad_field("gamma_rate", "must be positive and finite", gamma_rate);
    if (!(t >= 0.0)) {
        std::ostringstream os;
        os << "p_of_t: time must be non-negative, got " << t;
        throw InputError(os.str());
    }
    return -std::expm1(-gamma_rate * t);
}

DensityOperator system_output(const GadcParams& params, double p) {
    require_probability(p);
    return to_density(system_entries(params, p, 1.0 - p));
}

DensityOperator environment_output(const GadcParams& params, double p) {
    require_probability(p);
    return to_density(environment_entries(params, p, 1.0 - p));
}

DensityOperator system_state(const GadcParams& params, double t) {
    const Decay d = decay_at(params, t);
    return to_density(system_entries(params, d.p, d.q));
}

DensityOperator environment_state(const GadcParams& params, double t) {
    const Decay d = decay_at(params, t);
    return to_density(environment_entries(params, d.p, d.q));
}

std::pair<double, double> system_state_eigenvalues(const GadcParams& params, double t) {
    const Decay d = decay_at(params, t);
    return eigenvalues_of(system_entries(params, d.p, d.q));
}

std::pair<double, double> environment_state_eigenvalues(const GadcParams& params, double t) {
    const Decay d = decay_at(params, t);
    return eigenvalues_of(environment_entries(params, d.p, d.q));
}

DensityOperator joint_state_at_p(const GadcParams& params, double p, CouplingSign sign) {
    const ComplexMatrix u = gadc_unitary(p, sign);
    return DensityOperator(ComplexMatrix(u * params.initial_joint_state().matrix() * u.adjoint()));
}

DensityOperator joint_state(const GadcParams& params, double t, CouplingSign sign) {
    return joint_state_at_p(params, p_of_t(params.gamma_rate, t), sign);
}

DensityOperator iterate_map_check(const GadcParams& params, double t, int n_steps) {
    if (n_steps < 1) {
        throw InputError("iterate_map_check: n_steps must be >= 1, got " + std::to_string(n_steps));
    }
    if (!(t >= 0.0)) throw InputError("iterate_map_check: time must be non-negative");
    GadcParams step = params;
    step.p = params.gamma_rate * t / n_steps;
    if (step.p > 1.0) {
        std::ostringstream os;
        os << "iterate_map_check: per-step p = " << step.p << " exceeds 1; use more steps";
        throw InputError(os.str());
    }
    const KrausChannel phi = system_kraus(step);
    DensityOperator rho = params.initial_system_state();
    for (int i = 0; i < n_steps; ++i) rho = apply_channel(phi, rho);
    return rho;
}

}  // namespace strongcouple::channels
