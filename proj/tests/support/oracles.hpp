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

// Reference implementations used only by tests. They are written directly
// from the model definitions and share no code with the library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include <Eigen/Dense>

namespace oracle {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXd;

inline std::uint64_t seed() {
    const char* env = std::getenv("STRONGCOUPLE_SEED");
    if (env != nullptr && *env != '\0') {
        char* end = nullptr;
        const auto v = std::strtoull(env, &end, 10);
        if (end != nullptr && *end == '\0') return v;
    }
    return 20260101;
}

inline Vec eigenvalues(const Mat& m) {
    Eigen::SelfAdjointEigenSolver<Mat> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

inline double entropy_bits(const Mat& rho) {
    double s = 0.0;
    for (double l : eigenvalues(rho)) {
        if (l > 1e-14) s -= l * std::log2(l);
    }
    return s;
}

inline Mat random_hermitian(std::mt19937_64& rng, int dim) {
    std::normal_distribution<double> g;
    Mat m(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) m(i, j) = {g(rng), g(rng)};
    return (m + m.adjoint()) / 2.0;
}

inline Mat random_density(std::mt19937_64& rng, int dim, int rank = 0) {
    std::normal_distribution<double> g;
    const int r = rank > 0 ? rank : dim;
    Mat a(dim, r);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < r; ++j) a(i, j) = {g(rng), g(rng)};
    Mat rho = a * a.adjoint();
    return rho / rho.trace().real();
}

// Entry-by-entry partial trace over the second factor of a (2 x d) system.
inline Mat trace_out_second(const Mat& joint, int d1, int d2) {
    Mat out = Mat::Zero(d1, d1);
    for (int i = 0; i < d1; ++i)
        for (int j = 0; j < d1; ++j)
            for (int k = 0; k < d2; ++k) out(i, j) += joint(i * d2 + k, j * d2 + k);
    return out;
}

inline Mat trace_out_first(const Mat& joint, int d1, int d2) {
    Mat out = Mat::Zero(d2, d2);
    for (int i = 0; i < d2; ++i)
        for (int j = 0; j < d2; ++j)
            for (int k = 0; k < d1; ++k) out(i, j) += joint(k * d2 + i, k * d2 + j);
    return out;
}

// rho_S after one channel use at transition probability p.
inline Mat system_matrix(double alpha, double w0, double p) {
    const double ab = std::sqrt(1.0 - alpha * alpha);
    const double w1 = 1.0 - w0;
    Mat m(2, 2);
    m(0, 0) = (alpha * alpha + ab * ab * p) * w0 + alpha * alpha * (1.0 - p) * w1;
    m(0, 1) = alpha * ab * std::sqrt(1.0 - p);
    m(1, 0) = m(0, 1);
    m(1, 1) = ab * ab * (1.0 - p) * w0 + (ab * ab + alpha * alpha * p) * w1;
    return m;
}

// rho_E after one channel use at transition probability p.
inline Mat environment_matrix(double alpha, double w0, double p) {
    const double ab = std::sqrt(1.0 - alpha * alpha);
    const double w1 = 1.0 - w0;
    Mat m(2, 2);
    m(0, 0) = (alpha * alpha + ab * ab * (1.0 - p)) * w0 + alpha * alpha * p * w1;
    m(0, 1) = alpha * ab * std::sqrt(p);
    m(1, 0) = m(0, 1);
    m(1, 1) = ab * ab * p * w0 + (ab * ab + alpha * alpha * (1.0 - p)) * w1;
    return m;
}

inline double w0_at(double beta_gap) { return 1.0 / (1.0 + std::exp(-beta_gap)); }

// Eigenvalues of a real symmetric 2x2 [[a, b], [b, d]], ascending.
inline std::pair<double, double> eig2(double a, double b, double d) {
    const double mean = 0.5 * (a + d);
    const double r = std::hypot(0.5 * (a - d), b);
    return {mean - r, mean + r};
}

// Unit eigenvector of [[a, b], [b, d]] for eigenvalue l, sign fixed so the
// larger component is positive.
inline std::pair<double, double> eigvec2(double a, double b, double d, double l) {
    double x = 0.0, y = 0.0;
    if (std::abs(b) > 1e-300) {
        if (std::abs(a - l) > std::abs(d - l)) {
            x = -b;
            y = a - l;
        } else {
            x = d - l;
            y = -b;
        }
    } else {
        x = std::abs(a - l) < std::abs(d - l) ? 1.0 : 0.0;
        y = 1.0 - x;
    }
    const double n = std::hypot(x, y);
    x /= n;
    y /= n;
    if ((std::abs(x) >= std::abs(y) ? x : y) < 0) {
        x = -x;
        y = -y;
    }
    return {x, y};
}

}  // namespace oracle
