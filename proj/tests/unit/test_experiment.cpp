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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "strongcouple/experiment.hpp"

using namespace strongcouple;
using namespace strongcouple::experiment;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

const ExperimentResult& default_run() {
    static const ExperimentResult r = run(ExperimentConfig{});
    return r;
}

}  // namespace

TEST_CASE("config validation names the field") {
    ExperimentConfig c;
    CHECK_NOTHROW(c.validate());
    c.alpha = 1.2;
    CHECK_THROWS_WITH(c.validate(), ContainsSubstring("config.alpha"));
    c = {};
    c.beta = 0.0;
    CHECK_THROWS_WITH(c.validate(), ContainsSubstring("config.beta"));
    c = {};
    c.t_max = -1.0;
    CHECK_THROWS_WITH(c.validate(), ContainsSubstring("config.t_max"));
    c = {};
    c.n_samples = 2;
    CHECK_THROWS_WITH(c.validate(), ContainsSubstring("config.n_samples"));
    c = {};
    c.integrator.closure_tolerance = 0.0;
    CHECK_THROWS_WITH(c.validate(), ContainsSubstring("config.integrator.closure_tolerance"));
}

TEST_CASE("default run reproduces the asymptotic heat") {
    const auto& r = default_run();
    REQUIRE(r.thermo_s.times.size() == 2001);
    CHECK_THAT(r.thermo_s.heat.back(), WithinAbs(0.104, 0.002));
    CHECK_THAT(r.thermo_e.heat.back(), WithinAbs(-0.104, 0.002));
    CHECK(r.diagnostics.max_abs_work <= 1e-12);
    CHECK(r.diagnostics.max_energy_imbalance <= 1e-10);
    CHECK(r.diagnostics.closure_residual_s <= 1e-4);
    CHECK(r.diagnostics.closure_residual_e <= 1e-4);
    CHECK(r.diagnostics.max_triangle_deviation <= 1e-12);
}

TEST_CASE("long-time internal energy equals heat plus coherent energy") {
    const auto& s = default_run().thermo_s;
    CHECK_THAT(s.internal_energy_change.back(), WithinAbs(s.heat.back() + s.coherent_energy.back(), 1e-4));
    // Closed form: the excited population relaxes to w1, starting from 1/2.
    const double w1 = 1.0 - oracle::w0_at(1.0);
    CHECK_THAT(s.internal_energy_change.back(), WithinAbs(w1 - 0.5 + 0.5 * std::exp(-10.0) * (1 - 2 * w1), 1e-12));
}

TEST_CASE("information series endpoints") {
    const auto& info = default_run().info;
    CHECK(info.negativity.front() <= 1e-12);
    CHECK(info.negativity.back() <= 1e-3);
    CHECK(info.heat_asymmetry.back() <= 1e-3);
    CHECK_THAT(info.entropy_e.front(), WithinAbs(0.84, 0.005));
    CHECK(info.entropy_s.front() < 1e-12);
    for (double mi : info.mutual_information) CHECK(mi >= 0.0);
}

TEST_CASE("negativity has a single interior peak") {
    const auto& n = default_run().info.negativity;
    int maxima = 0;
    for (std::size_t i = 1; i + 1 < n.size(); ++i) {
        if (n[i] > n[i - 1] && n[i] >= n[i + 1]) ++maxima;
    }
    CHECK(maxima == 1);
}

TEST_CASE("heat asymmetry tracks negativity") {
    const auto& r = default_run();
    const auto rep = info::proportionality_report(r.info.heat_asymmetry, r.info.negativity, 1e-4);
    CHECK(rep.points > 100);
    CHECK(rep.ratio_relative_spread <= 0.05);
}

TEST_CASE("markov rows") {
    const auto& m = default_run().diagnostics.markov;
    REQUIRE(m.size() == 3);
    CHECK(m[0].steps == 10);
    CHECK(m[2].steps == 1000);
    CHECK(m[0].deviation > m[1].deviation);
    CHECK(m[1].deviation > m[2].deviation);
    CHECK(m[2].deviation <= 1e-3);
    const int bad[] = {0};
    CHECK_THROWS_AS(markov_convergence(ExperimentConfig{}, 1.0, bad), InputError);
}

TEST_CASE("consistency triangle over random parameters") {
    std::mt19937_64 rng(oracle::seed());
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        channels::GadcParams g;
        g.alpha = unit(rng);
        g.w0 = unit(rng);
        g.w1 = 1.0 - g.w0;
        const double p = unit(rng);
        CHECK(consistency_triangle(g, p) <= 1e-12);
        if (g.alpha > 0.05 && g.alpha < 0.99 && p > 0.05 && p < 0.95) {
            CHECK(consistency_triangle(g, p, channels::CouplingSign::antisymmetric) > 1e-3);
        }
    }
}

TEST_CASE("tight closure tolerance on a coarse grid fails with the residual") {
    ExperimentConfig c;
    c.n_samples = 101;
    c.integrator.closure_tolerance = 1e-8;
    CHECK_THROWS_AS(run(c), ClosureError);
}

TEST_CASE("sweep keeps input order and records failures") {
    std::vector<ExperimentConfig> configs(3);
    configs[0].alpha = 0.0;
    configs[0].n_samples = 1001;
    configs[1].n_samples = 1001;
    configs[2].n_samples = 101;
    configs[2].integrator.closure_tolerance = 1e-10;
    const auto out = sweep(configs, 2);
    REQUIRE(out.size() == 3);
    CHECK(out[0].ok);
    CHECK(out[0].config.alpha == 0.0);
    CHECK(out[0].max_abs_coherent_s < 1e-14);
    CHECK(out[0].max_abs_coherent_e < 1e-14);
    CHECK(out[1].ok);
    CHECK(out[1].max_abs_coherent_s > 0.1);
    CHECK_FALSE(out[2].ok);
    CHECK_THAT(out[2].failure, ContainsSubstring("closure"));

    const auto serial = sweep(configs, 1);
    CHECK(serial[1].q_s_curve == out[1].q_s_curve);
}

TEST_CASE("curves collapse against gamma t") {
    std::vector<ExperimentConfig> configs(3);
    const double rates[] = {0.5, 1.0, 2.0};
    for (int i = 0; i < 3; ++i) {
        configs[i].gamma = rates[i];
        configs[i].t_max = 10.0 / rates[i];
        configs[i].n_samples = 1001;
    }
    const auto out = sweep(configs);
    const auto ok = collapse_check(out);
    for (bool b : ok) CHECK(b);
    for (int i = 0; i < 3; ++i) CHECK_THAT(out[i].asymptotic_q_s, WithinAbs(out[1].asymptotic_q_s, 1e-10));

    configs[2].t_max = 3.0;
    const auto lone = collapse_check(sweep(configs));
    CHECK_FALSE(lone[2]);
}
