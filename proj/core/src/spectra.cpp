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

#include "strongcouple/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

namespace strongcouple::spectra {

void require_finite(const ComplexMatrix& m, const char* what) {
    if (m.size() == 0) {
        throw DimensionError(std::string(what) + ": empty matrix");
    }
    if (!m.allFinite()) {
        throw InputError(std::string(what) + ": matrix has non-finite entries");
    }
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionError("max_abs_diff: dimension mismatch");
    }
    return (a - b).cwiseAbs().maxCoeff();
}

HermitianOperator::HermitianOperator(const ComplexMatrix& m, double tolerance) {
    require_finite(m, "HermitianOperator");
    if (m.rows() != m.cols()) {
        throw DimensionError("HermitianOperator: matrix is not square");
    }
    const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
    const double skew = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (skew > tolerance * scale) {
        std::ostringstream os;
        os << "HermitianOperator: ||M - M^dagger||_max = " << skew << " exceeds " << tolerance * scale;
        throw InputError(os.str());
    }
    m_ = 0.5 * (m + m.adjoint());
}

HermitianOperator HermitianOperator::diagonal(const RealVector& values) {
    return HermitianOperator(values.cast<Complex>().asDiagonal().toDenseMatrix());
}

DensityOperator::DensityOperator(const HermitianOperator& op) : op_(op) {
    const double tr = op_.trace();
    if (std::abs(tr - 1.0) > kTraceTolerance) {
        std::ostringstream os;
        os.precision(17);
        os << "DensityOperator: trace " << tr << " differs from 1 by more than " << kTraceTolerance;
        throw InvalidStateError(os.str());
    }
    const auto spec = eig_hermitian(op_);
    if (spec.eigenvalues(0) < -kPositivityTolerance) {
        std::ostringstream os;
        os << "DensityOperator: eigenvalue " << spec.eigenvalues(0) << " below -" << kPositivityTolerance;
        throw InvalidStateError(os.str());
    }
}

DensityOperator::DensityOperator(const ComplexMatrix& m) : DensityOperator(HermitianOperator(m)) {}

DensityOperator DensityOperator::pure(const Eigen::VectorXcd& psi) {
    const double norm = psi.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
        throw InputError("DensityOperator::pure: state vector has zero or non-finite norm");
    }
    const Eigen::VectorXcd v = psi / norm;
    return DensityOperator(ComplexMatrix(v * v.adjoint()));
}

ComplexMatrix SpectralDecomposition::reconstruct() const {
    return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
    double sum = 0.0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
        for (Eigen::Index i = 0; i < a.rows(); ++i) {
            if (i != j) sum += std::norm(a(i, j));
        }
    }
    return std::sqrt(sum);
}

// Zero a(p, q) with J = diag-phase * real rotation; a <- J^dagger a J, v <- v J.
void rotate(ComplexMatrix& a, ComplexMatrix& v, Eigen::Index p, Eigen::Index q) {
    const Complex z = a(p, q);
    const double r = std::abs(z);
    const Complex phase = z / r;  // e^{i phi}
    const double app = a(p, p).real();
    const double aqq = a(q, q).real();

    const double tau = (aqq - app) / (2.0 * r);
    const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    const Complex sp = s * std::conj(phase);  // s e^{-i phi}
    const Complex cp = c * std::conj(phase);  // c e^{-i phi}

    const Eigen::Index n = a.rows();
    for (Eigen::Index k = 0; k < n; ++k) {
        const Complex akp = a(k, p);
        const Complex akq = a(k, q);
        a(k, p) = c * akp - sp * akq;
        a(k, q) = s * akp + cp * akq;
    }
    for (Eigen::Index k = 0; k < n; ++k) {
        const Complex apk = a(p, k);
        const Complex aqk = a(q, k);
        a(p, k) = c * apk - std::conj(sp) * aqk;
        a(q, k) = s * apk + std::conj(cp) * aqk;
    }
    for (Eigen::Index k = 0; k < n; ++k) {
        const Complex vkp = v(k, p);
        const Complex vkq = v(k, q);
        v(k, p) = c * vkp - sp * vkq;
        v(k, q) = s * vkp + cp * vkq;
    }
    a(p, q) = 0.0;
    a(q, p) = 0.0;
    a(p, p) = a(p, p).real();
    a(q, q) = a(q, q).real();
}

}  // namespace

SpectralDecomposition eig_hermitian(const HermitianOperator& op, const JacobiSettings& settings) {
    ComplexMatrix a = op.matrix();
    const Eigen::Index n = a.rows();
    ComplexMatrix v = ComplexMatrix::Identity(n, n);

    const double scale = std::max(1.0, a.norm());
    const double threshold = settings.tolerance * scale;
    const double negligible = 1e-20 * scale;

    double off = off_diagonal_norm(a);
    int sweep = 0;
    while (off > threshold) {
        if (sweep == settings.max_sweeps) {
            std::ostringstream os;
            os << "eig_hermitian: no convergence after " << settings.max_sweeps
               << " sweeps, off-diagonal residual " << off;
            throw ConvergenceError(os.str(), off);
        }
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                if (std::abs(a(p, q)) > negligible) rotate(a, v, p, q);
            }
        }
        off = off_diagonal_norm(a);
        ++sweep;
    }

    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&a](Eigen::Index i, Eigen::Index j) { return a(i, i).real() < a(j, j).real(); });

    SpectralDecomposition out{RealVector(n), ComplexMatrix(n, n)};
    for (Eigen::Index col = 0; col < n; ++col) {
        const Eigen::Index src = order[static_cast<std::size_t>(col)];
        out.eigenvalues(col) = a(src, src).real();
        Eigen::VectorXcd vec = v.col(src);
        Eigen::Index big = 0;
        vec.cwiseAbs().maxCoeff(&big);
        vec *= std::conj(vec(big)) / std::abs(vec(big));
        vec(big) = vec(big).real();
        out.eigenvectors.col(col) = vec;
    }
    return out;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b) {
    const Eigen::Index p = b.rows();
    const Eigen::Index q = b.cols();
    ComplexMatrix out(a.rows() * p, a.cols() * q);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * p, j * q, p, q) = a(i, j) * b;
        }
    }
    return out;
}

namespace {

void check_bipartite(const ComplexMatrix& joint, BipartiteDims dims, const char* what) {
    if (dims.first < 1 || dims.second < 1 || joint.rows() != joint.cols() || joint.rows() != dims.total()) {
        std::ostringstream os;
        os << what << ": operator of dimension " << joint.rows() << "x" << joint.cols()
           << " does not match bipartite dims (" << dims.first << ", " << dims.second << ")";
        throw DimensionError(os.str());
    }
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& joint, Subsystem keep, BipartiteDims dims) {
    check_bipartite(joint, dims, "partial_trace");
    const Eigen::Index d1 = dims.first;
    const Eigen::Index d2 = dims.second;
    if (keep == Subsystem::first) {
        ComplexMatrix out = ComplexMatrix::Zero(d1, d1);
        for (Eigen::Index i = 0; i < d1; ++i)
            for (Eigen::Index k = 0; k < d1; ++k)
                for (Eigen::Index j = 0; j < d2; ++j) out(i, k) += joint(i * d2 + j, k * d2 + j);
        return out;
    }
    ComplexMatrix out = ComplexMatrix::Zero(d2, d2);
    for (Eigen::Index j = 0; j < d2; ++j)
        for (Eigen::Index l = 0; l < d2; ++l)
            for (Eigen::Index i = 0; i < d1; ++i) out(j, l) += joint(i * d2 + j, i * d2 + l);
    return out;
}

DensityOperator partial_trace(const DensityOperator& joint, Subsystem keep, BipartiteDims dims) {
    return DensityOperator(partial_trace(joint.matrix(), keep, dims));
}

HermitianOperator partial_transpose(const HermitianOperator& joint, Subsystem which, BipartiteDims dims) {
    const ComplexMatrix& m = joint.matrix();
    check_bipartite(m, dims, "partial_transpose");
    const Eigen::Index d1 = dims.first;
    const Eigen::Index d2 = dims.second;
    ComplexMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < d1; ++i)
        for (Eigen::Index j = 0; j < d2; ++j)
            for (Eigen::Index k = 0; k < d1; ++k)
                for (Eigen::Index l = 0; l < d2; ++l) {
                    out(i * d2 + j, k * d2 + l) =
                        which == Subsystem::first ? m(k * d2 + j, i * d2 + l) : m(i * d2 + l, k * d2 + j);
                }
    return HermitianOperator(out);
}

double trace_norm(const HermitianOperator& op) {
    return eig_hermitian(op).eigenvalues.cwiseAbs().sum();
}

}  // namespace strongcouple::spectra
