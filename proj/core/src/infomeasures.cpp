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

#include "strongcouple/infomeasures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace strongcouple::info {

double von_neumann_entropy(const DensityOperator& rho) {
    const auto spec = spectra::eig_hermitian(rho.op());
    double s = 0.0;
    for (Eigen::Index i = 0; i < spec.size(); ++i) {
        const double lambda = spec.eigenvalues(i);
        if (lambda <= 1e-12) continue;
        s -= lambda * std::log2(lambda);
    }
    return s;
}

double l1_coherence(const DensityOperator& rho) {
    const auto& m = rho.matrix();
    double c = 0.0;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (i != j) c += std::abs(m(i, j));
    return c;
}

double negativity(const DensityOperator& joint, BipartiteDims dims) {
    const auto pt = spectra::partial_transpose(joint.op(), spectra::Subsystem::first, dims);
    const auto spec = spectra::eig_hermitian(pt);
    const double from_norm = 0.5 * (spec.eigenvalues.cwiseAbs().sum() - 1.0);
    double from_negatives = 0.0;
    for (Eigen::Index i = 0; i < spec.size(); ++i) {
        if (spec.eigenvalues(i) < 0.0) from_negatives -= spec.eigenvalues(i);
    }
    if (std::abs(from_norm - from_negatives) > 1e-10) {
        std::ostringstream os;
        os << "negativity: trace-norm route " << from_norm << " and negative-eigenvalue route " << from_negatives
           << " disagree";
        throw NumericalError(os.str());
    }
    return from_negatives;
}

double mutual_information(const DensityOperator& joint, BipartiteDims dims) {
    const auto first = spectra::partial_trace(joint, spectra::Subsystem::first, dims);
    const auto second = spectra::partial_trace(joint, spectra::Subsystem::second, dims);
    const double mi = von_neumann_entropy(first) + von_neumann_entropy(second) - von_neumann_entropy(joint);
    return mi < 0.0 && mi > -1e-12 ? 0.0 : mi;
}

std::vector<double> heat_asymmetry(std::span<const double> q_s, std::span<const double> q_e) {
    if (q_s.size() != q_e.size()) throw InputError("heat_asymmetry: arrays differ in length");
    std::vector<double> out(q_s.size());
    for (std::size_t i = 0; i < q_s.size(); ++i) out[i] = std::abs(q_s[i] + q_e[i]);
    return out;
}

ProportionalityReport proportionality_report(std::span<const double> a, std::span<const double> b,
                                             double mask_threshold) {
    if (a.size() != b.size()) throw InputError("proportionality_report: arrays differ in length");
    std::vector<double> ratios;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::abs(a[i]) >= mask_threshold && std::abs(b[i]) >= mask_threshold) ratios.push_back(a[i] / b[i]);
    }
    if (ratios.empty()) {
        std::ostringstream os;
        os << "proportionality_report: no points with both |a|, |b| >= " << mask_threshold;
        throw InputError(os.str());
    }
    ProportionalityReport r;
    r.points = ratios.size();
    for (double x : ratios) r.ratio_mean += x;
    r.ratio_mean /= static_cast<double>(ratios.size());
    for (double x : ratios) r.ratio_relative_spread = std::max(r.ratio_relative_spread, std::abs(x / r.ratio_mean - 1.0));
    return r;
}

}  // namespace strongcouple::info
