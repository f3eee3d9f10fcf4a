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

#include <string>
#include <utility>
#include <vector>

#include "strongcouple/spectra.hpp"

/// Generalized amplitude-damping channel (GADC) between a qubit system S and
/// an effective two-level environment E.
///
/// Basis conventions are fixed throughout: {|g>, |e>} for S, {|E0>, |E1>} for
/// E, and {|g,E0>, |g,E1>, |e,E0>, |e,E1>} for the joint space (S is the first
/// tensor factor). Energies are measured in units of the gap E_e - E_g with
/// E_g = E_0 = 0 and E_e = E_1 = 1.
namespace strongcouple::channels {

using spectra::ComplexMatrix;
using spectra::DensityOperator;
using spectra::HermitianOperator;

inline constexpr double kCompletenessTolerance = 1e-10;

struct GadcParams {
    double p = 0.0;           // transition probability for one application
    double w0 = 1.0;          // thermal weight of |E0>
    double w1 = 0.0;          // thermal weight of |E1>
    double alpha = 1.0;       // amplitude of |g> in the initial pure system state
    double gamma_rate = 1.0;  // transition probability per unit time
    double e_g = 0.0;
    double e_e = 1.0;
    double e_0 = 0.0;
    double e_1 = 1.0;

    /// Thermal weights at inverse temperature `beta_gap` = beta (E_e - E_g):
    /// w0 = 1 / (1 + exp(-beta_gap)), w1 = 1 - w0.
    static GadcParams from_beta(double alpha, double beta_gap, double gamma_rate = 1.0, double p = 0.0);

    /// Throws InputError naming the offending field.
    void validate() const;

    double alpha_bar() const;  // sqrt(1 - alpha^2)
    HermitianOperator system_hamiltonian() const;
    HermitianOperator environment_hamiltonian() const;
    DensityOperator initial_system_state() const;
    DensityOperator initial_environment_state() const;
    DensityOperator initial_joint_state() const;
};

/// Sign of the |e,E0> -> |g,E1> amplitude in the exchange block.
enum class CouplingSign {
    /// [[c, s], [s, c]] exactly as the interaction rules are written. For
    /// 0 < p < 1 this matrix is not unitary: U U^dagger carries 2 sqrt(p(1-p))
    /// in the exchange block. All closed-form states in this module follow it.
    symmetric,
    /// [[c, -s], [s, c]]: the unitary completion of the same rules.
    antisymmetric,
};

/// 4x4 joint evolution matrix in the fixed joint basis. Throws InputError
/// unless p is in [0, 1]. p = 0 gives the identity, p = 1 the SWAP gate
/// (for the symmetric sign).
ComplexMatrix gadc_unitary(double p, CouplingSign sign = CouplingSign::symmetric);

/// Max-entry deviation of U U^dagger from the identity.
double unitarity_defect(const ComplexMatrix& u);

/// Finite family of equal-sized Kraus operators rho -> sum_i K_i rho K_i^dagger.
class KrausChannel {
public:
    /// Throws ChannelError if sum K^dagger K deviates from I by more than
    /// kCompletenessTolerance, DimensionError on ragged or empty input.
    KrausChannel(std::vector<ComplexMatrix> operators, std::string label);

    /// Same shape checks but records, rather than rejects, a completeness
    /// defect. apply_channel checks the output of such channels instead.
    static KrausChannel unchecked(std::vector<ComplexMatrix> operators, std::string label);

    const std::vector<ComplexMatrix>& operators() const noexcept { return ops_; }
    const std::string& label() const noexcept { return label_; }
    Eigen::Index input_dim() const noexcept { return ops_.front().cols(); }
    Eigen::Index output_dim() const noexcept { return ops_.front().rows(); }

    /// ||sum K^dagger K - I||_max.
    double completeness_defect() const noexcept { return defect_; }
    bool trace_preserving() const noexcept { return defect_ <= kCompletenessTolerance; }

private:
    KrausChannel(std::vector<ComplexMatrix> operators, std::string label, bool enforce);

    std::vector<ComplexMatrix> ops_;
    std::string label_;
    double defect_ = 0.0;
};

/// K_ij = sqrt(w_i) <E_j|U|E_i>, ordered K00, K01, K10, K11.
KrausChannel system_kraus(const GadcParams& params);

/// L_k = <k|U|psi(0)> (k = g, e) with psi(0) = alpha|g> + sqrt(1-alpha^2)|e>.
/// Built from the symmetric coupling; sum L^dagger L = I holds only when
/// alpha in {0, 1} or p in {0, 1}, so the channel is returned unchecked.
KrausChannel environment_kraus(const GadcParams& params);

/// sum_i K_i rho K_i^dagger. Throws DimensionError on mismatch and
/// ChannelError when an unchecked channel fails to preserve the trace of
/// this particular input.
DensityOperator apply_channel(const KrausChannel& channel, const DensityOperator& rho);

/// p(t) = 1 - exp(-gamma_rate t). Throws InputError for t < 0 or rate <= 0.
double p_of_t(double gamma_rate, double t);

/// Closed-form single-application outputs Phi[rho_S(0)] and Lambda[rho_E(0)]
/// at transition probability `p` (params.p is ignored).
DensityOperator system_output(const GadcParams& params, double p);
DensityOperator environment_output(const GadcParams& params, double p);

/// Markovian closed forms: the single-application outputs at p = p_of_t.
DensityOperator system_state(const GadcParams& params, double t);
DensityOperator environment_state(const GadcParams& params, double t);

/// Closed-form eigenvalues (ascending) of system_state / environment_state,
/// 1/2 (1 -/+ sqrt((rho00 - rho11)^2 + 4 |rho01|^2)).
std::pair<double, double> system_state_eigenvalues(const GadcParams& params, double t);
std::pair<double, double> environment_state_eigenvalues(const GadcParams& params, double t);

/// U(p(t)) (rho_S(0) (x) rho_E(0)) U^dagger.
DensityOperator joint_state(const GadcParams& params, double t, CouplingSign sign = CouplingSign::symmetric);

/// Joint state at an explicit transition probability.
DensityOperator joint_state_at_p(const GadcParams& params, double p, CouplingSign sign = CouplingSign::symmetric);

/// Phi applied n_steps times to rho_S(0) with per-step p = gamma_rate t / n_steps.
/// Throws InputError if n_steps < 1 or the per-step p exceeds 1.
DensityOperator iterate_map_check(const GadcParams& params, double t, int n_steps);

}  // namespace strongcouple::channels
