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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "strongcouple/channels.hpp"

using namespace strongcouple;
using namespace strongcouple::channels;
using spectra::max_abs_diff;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

GadcParams make(double alpha, double w0, double p) {
    GadcParams g;
    g.alpha = alpha;
    g.w0 = w0;
    g.w1 = 1.0 - w0;
    g.p = p;
    return g;
}

// Joint matrix written out in the basis |g,E0>, |g,E1>, |e,E0>, |e,E1>.
oracle::Mat coupling(double p, double sign) {
    const double c = std::sqrt(1 - p), s = std::sqrt(p);
    oracle::Mat u(4, 4);
    u << 1, 0, 0, 0,
         0, c, sign * s, 0,
         0, s, c, 0,
         0, 0, 0, 1;
    return u;
}

}  // namespace

TEST_CASE("thermal weights at unit inverse temperature") {
    const auto g = GadcParams::from_beta(0.5, 1.0);
    CHECK(g.w0 >= 0.7305);
    CHECK(g.w0 <= 0.7315);
    CHECK(g.w1 == 1.0 - g.w0);
    CHECK_THAT(g.w0, WithinAbs(oracle::w0_at(1.0), 1e-15));
    CHECK_THAT(GadcParams::from_beta(0.5, 40.0).w0, WithinAbs(1.0, 1e-15));
}

TEST_CASE("parameter validation names the field") {
    CHECK_THROWS_WITH(GadcParams::from_beta(0.5, -1.0), Catch::Matchers::StartsWith("GadcParams.beta"));
    CHECK_THROWS_WITH(make(1.5, 0.7, 0.1).validate(), Catch::Matchers::StartsWith("GadcParams.alpha"));
    CHECK_THROWS_WITH(make(0.5, 0.7, 1.1).validate(), Catch::Matchers::StartsWith("GadcParams.p"));
    auto g = make(0.5, 0.7, 0.1);
    g.w1 = 0.5;
    CHECK_THROWS_AS(g.validate(), InputError);
    g = make(0.5, 0.7, 0.1);
    g.e_1 = 3.0;
    CHECK_THROWS_WITH(g.validate(), Catch::Matchers::StartsWith("GadcParams.e_1"));
    g = make(0.5, 0.7, 0.1);
    g.gamma_rate = 0.0;
    CHECK_THROWS_AS(g.validate(), InputError);
}

TEST_CASE("joint matrix endpoints") {
    CHECK(max_abs_diff(gadc_unitary(0.0), oracle::Mat::Identity(4, 4)) == 0.0);
    oracle::Mat swap = oracle::Mat::Zero(4, 4);
    swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
    CHECK(max_abs_diff(gadc_unitary(1.0), swap) == 0.0);
    CHECK_THROWS_AS(gadc_unitary(-0.1), InputError);
    CHECK_THROWS_AS(gadc_unitary(1.1), InputError);
}

TEST_CASE("unitarity defect of the two coupling signs") {
    for (double p : {0.0, 0.1, 0.25, 0.5, 0.9, 1.0}) {
        CHECK(unitarity_defect(gadc_unitary(p, CouplingSign::antisymmetric)) < 1e-15);
        CHECK_THAT(unitarity_defect(gadc_unitary(p, CouplingSign::symmetric)),
                   WithinAbs(2.0 * std::sqrt(p * (1.0 - p)), 1e-15));
        CHECK(max_abs_diff(gadc_unitary(p), coupling(p, 1.0)) == 0.0);
        CHECK(max_abs_diff(gadc_unitary(p, CouplingSign::antisymmetric), coupling(p, -1.0)) == 0.0);
    }
}

TEST_CASE("system kraus operators are the environment matrix elements of the coupling") {
    std::mt19937_64 rng(oracle::seed());
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        const auto g = make(unit(rng), unit(rng), unit(rng));
        const oracle::Mat u = coupling(g.p, 1.0);
        const double w[2] = {g.w0, g.w1};
        const auto channel = system_kraus(g);
        const auto& ops = channel.operators();
        REQUIRE(ops.size() == 4);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                oracle::Mat k(2, 2);
                for (int a = 0; a < 2; ++a)
                    for (int b = 0; b < 2; ++b) k(a, b) = std::sqrt(w[i]) * u(2 * a + j, 2 * b + i);
                CHECK(max_abs_diff(ops[2 * i + j], k) < 1e-15);
            }
        }
    }
}

TEST_CASE("system channel is complete for every p") {
    for (int i = 0; i <= 100; ++i) {
        const auto ch = system_kraus(make(0.3, 0.6, i / 100.0));
        CHECK(ch.completeness_defect() <= 1e-10);
        CHECK(ch.trace_preserving());
    }
}

TEST_CASE("system channel output is the closed form") {
    std::mt19937_64 rng(oracle::seed() + 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = make(unit(rng), unit(rng), unit(rng));
        const auto ref = oracle::system_matrix(g.alpha, g.w0, g.p);
        CHECK(max_abs_diff(apply_channel(system_kraus(g), g.initial_system_state()).matrix(), ref) < 1e-14);
        CHECK(max_abs_diff(system_output(g, g.p).matrix(), ref) < 1e-14);
        const auto joint = joint_state_at_p(g, g.p).matrix();
        CHECK(max_abs_diff(oracle::trace_out_second(joint, 2, 2), ref) < 1e-14);
    }
}

TEST_CASE("environment outputs follow the symmetric coupling") {
    std::mt19937_64 rng(oracle::seed() + 2);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = make(unit(rng), unit(rng), unit(rng));
        const auto ref = oracle::environment_matrix(g.alpha, g.w0, g.p);
        CHECK(max_abs_diff(environment_output(g, g.p).matrix(), ref) < 1e-14);
        CHECK(max_abs_diff(apply_channel(environment_kraus(g), g.initial_environment_state()).matrix(), ref) < 1e-14);
        const auto joint = joint_state_at_p(g, g.p).matrix();
        CHECK(max_abs_diff(oracle::trace_out_first(joint, 2, 2), ref) < 1e-14);
    }
}

TEST_CASE("environment kraus completeness defect") {
    const auto g = make(std::sqrt(0.5), 0.7, 0.5);
    const auto ch = environment_kraus(g);
    CHECK_THAT(ch.completeness_defect(), WithinAbs(2 * g.alpha * g.alpha_bar() * std::sqrt(g.p * (1 - g.p)), 1e-15));
    CHECK_FALSE(ch.trace_preserving());
    for (double a : {0.0, 1.0}) CHECK(environment_kraus(make(a, 0.7, 0.5)).completeness_defect() < 1e-15);
    for (double p : {0.0, 1.0}) CHECK(environment_kraus(make(0.6, 0.7, p)).completeness_defect() < 1e-15);

    // Coherent inputs expose the defect.
    Eigen::VectorXcd plus(2);
    plus << 1.0, 1.0;
    CHECK_THROWS_AS(apply_channel(ch, spectra::DensityOperator::pure(plus)), ChannelError);
}

TEST_CASE("kraus channel construction") {
    oracle::Mat half = oracle::Mat::Identity(2, 2) * 0.5;
    CHECK_THROWS_AS(KrausChannel({half}, "bad"), ChannelError);
    CHECK_NOTHROW(KrausChannel::unchecked({half}, "loose"));
    CHECK_THROWS_AS(KrausChannel({}, "empty"), DimensionError);
    CHECK_THROWS_AS(KrausChannel({oracle::Mat::Identity(2, 2), oracle::Mat::Zero(3, 3)}, "ragged"), DimensionError);
    const auto ch = system_kraus(make(0.5, 0.5, 0.5));
    CHECK_THROWS_AS(apply_channel(ch, spectra::DensityOperator(oracle::Mat(oracle::Mat::Identity(4, 4) / 4.0))),
                    DimensionError);
}

TEST_CASE("system channel maps random states to states") {
    std::mt19937_64 rng(oracle::seed() + 3);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto g = make(unit(rng), unit(rng), unit(rng));
        const auto out = apply_channel(system_kraus(g), spectra::DensityOperator(oracle::random_density(rng, 2)));
        CHECK_THAT(out.op().trace(), WithinAbs(1.0, 1e-10));
        CHECK(oracle::eigenvalues(out.matrix())(0) >= -1e-10);
    }
}

TEST_CASE("time parametrization") {
    CHECK(p_of_t(1.0, 0.0) == 0.0);
    CHECK_THAT(p_of_t(2.0, 0.5), WithinRel(1.0 - std::exp(-1.0), 1e-15));
    CHECK_THAT(p_of_t(1.0, 1e-12), WithinRel(1e-12, 1e-9));
    CHECK_THROWS_AS(p_of_t(1.0, -1.0), InputError);
    CHECK_THROWS_AS(p_of_t(0.0, 1.0), InputError);

    const auto g = GadcParams::from_beta(std::sqrt(0.5), 1.0);
    for (double t : {0.0, 0.3, 1.0, 4.0}) {
        const double p = 1.0 - std::exp(-t);
        CHECK(max_abs_diff(system_state(g, t).matrix(), oracle::system_matrix(g.alpha, g.w0, p)) < 1e-15);
        CHECK(max_abs_diff(environment_state(g, t).matrix(), oracle::environment_matrix(g.alpha, g.w0, p)) < 1e-15);
    }
}

TEST_CASE("closed-form eigenvalues") {
    std::mt19937_64 rng(oracle::seed() + 4);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = GadcParams::from_beta(unit(rng), 0.1 + 3 * unit(rng), 0.5 + unit(rng));
        const double t = 5 * unit(rng);
        const auto [s0, s1] = system_state_eigenvalues(g, t);
        const auto rs = oracle::eigenvalues(system_state(g, t).matrix());
        CHECK_THAT(s0, WithinAbs(rs(0), 1e-14));
        CHECK_THAT(s1, WithinAbs(rs(1), 1e-14));
        const auto [e0, e1] = environment_state_eigenvalues(g, t);
        const auto re = oracle::eigenvalues(environment_state(g, t).matrix());
        CHECK_THAT(e0, WithinAbs(re(0), 1e-14));
        CHECK_THAT(e1, WithinAbs(re(1), 1e-14));
    }
}

TEST_CASE("joint state keeps unit trace under both couplings") {
    const auto g = GadcParams::from_beta(std::sqrt(0.5), 1.0);
    for (double t : {0.0, 0.5, 1.0, 3.0}) {
        for (auto sign : {CouplingSign::symmetric, CouplingSign::antisymmetric}) {
            CHECK_THAT(joint_state(g, t, sign).op().trace(), WithinAbs(1.0, 1e-14));
        }
    }
    CHECK(max_abs_diff(joint_state(g, 0.0).matrix(), g.initial_joint_state().matrix()) == 0.0);
}

TEST_CASE("repeated weak channel approaches the exponential form") {
    const auto g = GadcParams::from_beta(std::sqrt(0.5), 1.0);
    double prev = 1.0;
    for (int n : {10, 100, 1000}) {
        const double dev = max_abs_diff(iterate_map_check(g, 1.0, n).matrix(), system_state(g, 1.0).matrix());
        CHECK(dev < prev);
        CHECK(dev * n < 0.1);
        prev = dev;
    }
    CHECK_THROWS_AS(iterate_map_check(g, 1.0, 0), InputError);
    CHECK_THROWS_AS(iterate_map_check(g, 5.0, 2), InputError);
}
