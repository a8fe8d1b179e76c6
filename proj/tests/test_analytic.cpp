/*
   Copyright 2026 The sagin-outage authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cmath>

#include "analytic.hpp"
#include "doctest.h"
#include "mc.hpp"

using namespace sagin;

namespace {

Scenario base(double eta_db = 130.0) {
    Scenario s;
    s.eta_s = db_to_lin(eta_db);
    s.gamma_s = gamma_from_rate(0.1, s.swipt.rho);
    s.gamma_a = gamma_from_rate(0.1, s.swipt.rho);
    return s;
}

}  // namespace

TEST_CASE("closed form agrees with the integral") {
    for (double eta : {100.0, 120.0, 140.0})
        for (bool light : {false, true}) {
            Scenario s = base(eta);
            if (light) s.sr = ShadowedRicianParams{5.0, 0.251, 0.279};
            CAPTURE(eta);
            CAPTURE(light);
            CHECK(std::abs(op_s2g_closed(s).value - op_s2g_integral(s).value) < 1e-4);
            CHECK(std::abs(op_a2a_closed(s, IcMode::imperfect).value - op_a2a_integral(s, IcMode::imperfect).value) <
                  1e-4);
        }
    const Scenario s = base(125.0);
    CHECK(std::abs(op_a2a_closed(s, IcMode::perfect).value - op_a2a_integral(s, IcMode::perfect).value) < 1e-4);
}

TEST_CASE("integral agrees with Monte Carlo") {
    const Scenario s = base(120.0);
    const McCounts c = simulate_counts(s, 400000, 5);
    const double se = 0.5 / std::sqrt(400000.0);
    CHECK(std::abs(double(c.s2g) / c.trials - op_s2g_integral(s).value) < 4 * se);
    CHECK(std::abs(double(c.a2a_im) / c.trials - op_a2a_integral(s, IcMode::imperfect).value) < 4 * se);
    CHECK(std::abs(double(c.a2a_p) / c.trials - op_a2a_integral(s, IcMode::perfect).value) < 4 * se);
    CHECK(std::abs(double(c.linear_branch) / c.trials - prob_linear_branch(s)) < 4 * se);
}

TEST_CASE("second cone case: integral agrees with Monte Carlo") {
    Scenario s = base(120.0);
    s.cone.h_1 = 480.0;
    s.cone.h_2 = 490.0;
    s.cone.phi = M_PI / 6;
    REQUIRE_FALSE(s.cone.arx_case1());
    const McCounts c = simulate_counts(s, 400000, 6);
    const double se = 0.5 / std::sqrt(400000.0);
    CHECK(std::abs(double(c.a2a_im) / c.trials - op_a2a_integral(s, IcMode::imperfect).value) < 4 * se);
    CHECK(std::abs(op_a2a_closed(s, IcMode::imperfect).value - op_a2a_integral(s, IcMode::imperfect).value) < 1e-4);
}

TEST_CASE("exact outage where the SNR ceiling is below the threshold") {
    Scenario s = base();
    s.swipt.mu = 0.5;
    s.gamma_s = 1.5;
    CHECK(op_s2g_closed(s).value == 1.0);
    CHECK(op_s2g_integral(s).value == 1.0);
    s = base();
    s.swipt.mu = 1.0;
    CHECK(op_a2a_closed(s, IcMode::imperfect).value == 1.0);
    CHECK(op_a2a_integral(s, IcMode::perfect).value == 1.0);
}

TEST_CASE("zero threshold gives zero outage") {
    Scenario s = base();
    s.gamma_s = s.gamma_a = 0.0;
    CHECK(op_s2g_closed(s).value == 0.0);
    CHECK(op_s2g_integral(s).value == doctest::Approx(0.0));
    CHECK(op_a2a_closed(s, IcMode::imperfect).value == 0.0);
}

TEST_CASE("large saturation threshold approaches the linear model") {
    Scenario s = base(110.0), lin = s;
    s.swipt.P_th = 1e3;
    lin.swipt.P_th = INFINITY;
    CHECK(prob_linear_branch(s) > 1.0 - 1e-9);
    CHECK(op_s2g_integral(s).value == doctest::Approx(op_s2g_integral(lin).value).epsilon(1e-6));
    const McCounts c = simulate_counts(lin, 200000, 8);
    CHECK(std::abs(double(c.s2g) / c.trials - op_s2g_integral(lin).value) < 4 * 0.5 / std::sqrt(200000.0));
}

TEST_CASE("perfect cancellation is never worse") {
    for (int i = 0; i < 20; ++i) {
        const Scenario s = base(95.0 + 3.0 * i);
        CAPTURE(i);
        CHECK(op_a2a_integral(s, IcMode::perfect).value <= op_a2a_integral(s, IcMode::imperfect).value + 1e-12);
    }
}

TEST_CASE("throughput") {
    CHECK(avg_throughput(0.4, 1.0, 0.1, 0.1, 0.8, 0.8) == doctest::Approx(0.012).epsilon(1e-14));
    CHECK(avg_throughput(0.0, 2.0, 0.1, 0.2, 0.0, 0.0) == doctest::Approx(0.3));
    CHECK(avg_throughput(0.3, 1.0, 0.1, 0.1, 1.0, 1.0) == 0.0);
}

TEST_CASE("non-integer shadowing order is rejected by the series path only") {
    Scenario s = base();
    s.sr.m = 2.5;
    CHECK_THROWS_AS(op_s2g_closed(s), DomainError);
    const double v = op_s2g_integral(s).value;
    CHECK(v > 0.0);
    CHECK(v < 1.0);
}

TEST_CASE("clamp records the excess") {
    OpDiagnostics d;
    CHECK(clamp_probability(1.0 + 1e-3, d) == 1.0);
    CHECK(d.clamp_excess == doctest::Approx(1e-3));
    CHECK_THROWS_AS(clamp_probability(NAN, d), NumericError);
}
