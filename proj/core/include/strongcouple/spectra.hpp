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

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "strongcouple/errors.hpp"

/// Dense complex linear algebra for the small (2..16 dimensional) operators
/// that appear in qubit-qubit problems: Hermitian spectra, tensor products,
/// partial trace and partial transpose.
namespace strongcouple::spectra {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using RealVector = Eigen::VectorXd;
using RealMatrix = Eigen::MatrixXd;

inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-10;
inline constexpr double kPositivityTolerance = 1e-10;

/// Throws DimensionError / InputError if `m` is empty or holds NaN/Inf.
void require_finite(const ComplexMatrix& m, const char* what);

/// Largest entry magnitude of `a - b`. Dimensions must agree.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Square complex matrix equal to its adjoint.
///
/// The constructor rejects matrices whose anti-Hermitian part exceeds
/// `tolerance` (max-entry norm) and stores the exact symmetrization
/// (M + M^dagger) / 2, so `matrix()` is Hermitian to the last bit.
class HermitianOperator {
public:
    explicit HermitianOperator(const ComplexMatrix& m, double tolerance = 1e-9);

    const ComplexMatrix& matrix() const noexcept { return m_; }
    Eigen::Index dim() const noexcept { return m_.rows(); }
    double trace() const { return m_.trace().real(); }

    static HermitianOperator diagonal(const RealVector& values);

private:
    ComplexMatrix m_;
};

/// Hermitian, unit trace, positive semidefinite (up to kPositivityTolerance).
class DensityOperator {
public:
    /// Throws InvalidStateError if trace or positivity checks fail.
    explicit DensityOperator(const HermitianOperator& op);
    explicit DensityOperator(const ComplexMatrix& m);

    const HermitianOperator& op() const noexcept { return op_; }
    const ComplexMatrix& matrix() const noexcept { return op_.matrix(); }
    Eigen::Index dim() const noexcept { return op_.dim(); }

    /// |psi><psi| for a (not necessarily normalized) state vector.
    static DensityOperator pure(const Eigen::VectorXcd& psi);

private:
    HermitianOperator op_;
};

/// Ascending eigenvalues with matching orthonormal eigenvector columns.
struct SpectralDecomposition {
    RealVector eigenvalues;
    ComplexMatrix eigenvectors;

    Eigen::Index size() const noexcept { return eigenvalues.size(); }
    /// V diag(lambda) V^dagger.
    ComplexMatrix reconstruct() const;
};

struct JacobiSettings {
    double tolerance = 1e-14;  // off-diagonal Frobenius norm, relative to max(1, ||M||_F)
    int max_sweeps = 100;
};

/// Cyclic complex Jacobi eigensolver.
///
/// Eigenvalues come back ascending (stable with respect to the order the
/// rotations leave them in, so exact ties keep their positions). Each
/// eigenvector is phased so that its largest-magnitude component is real and
/// positive; the result is a deterministic function of the input bits.
///
/// Throws ConvergenceError carrying the remaining off-diagonal norm if
/// `settings.max_sweeps` is exhausted.
SpectralDecomposition eig_hermitian(const HermitianOperator& op, const JacobiSettings& settings = {});

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Subsystem { first, second };

struct BipartiteDims {
    Eigen::Index first = 2;
    Eigen::Index second = 2;
    Eigen::Index total() const noexcept { return first * second; }
};

/// Trace out the subsystem that is not `keep`.
DensityOperator partial_trace(const DensityOperator& joint, Subsystem keep, BipartiteDims dims);
ComplexMatrix partial_trace(const ComplexMatrix& joint, Subsystem keep, BipartiteDims dims);

/// Transpose the indices of `which`; an involution that preserves the trace.
HermitianOperator partial_transpose(const HermitianOperator& joint, Subsystem which, BipartiteDims dims);

/// Sum of |eigenvalue| (Schatten 1-norm of a Hermitian operator).
double trace_norm(const HermitianOperator& op);

}  // namespace strongcouple::spectra
