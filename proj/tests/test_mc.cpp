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

TEST_CASE("counts do not depend on the worker count") {
    const Scenario s = base();
    const McCounts a = simulate_counts(s, 50000, 3, 1);
    const McCounts b = simulate_counts(s, 50000, 3, 4);
    CHECK(a.s2g == b.s2g);
    CHECK(a.a2a_im == b.a2a_im);
    CHECK(a.a2a_p == b.a2a_p);
    CHECK(a.linear_branch == b.linear_branch);
    const McCounts c = simulate_counts(s, 50000, 4, 1);
    CHECK(c.s2g != a.s2g);
}

TEST_CASE("trial draws are keyed by (seed, index)") {
    const Scenario s = base();
    const FadingDraw a = draw_trial(s, 9, 123), b = draw_trial(s, 9, 123), c = draw_trial(s, 9, 124);
    CHECK(a.X == b.X);
    CHECK(a.w_rt == b.w_rt);
    CHECK(a.X != c.X);
}

TEST_CASE("zero thresholds never fail") {
    Scenario s = base();
    s.gamma_s = s.gamma_a = 0.0;
    const McCounts c = simulate_counts(s, 20000, 1, 1);
    CHECK(c.s2g == 0);
    CHECK(c.a2a_im == 0);
    CHECK(c.a2a_p == 0);
}

TEST_CASE("estimate and its standard error") {
    const OutageEstimate e = make_estimate(250, 1000, 7);
    CHECK(e.value == doctest::Approx(0.25));
    CHECK(e.std_error == doctest::Approx(std::sqrt(0.25 * 0.75 / 1000)));
    CHECK(e.seed == 7);
    CHECK_FALSE(e.resolution_floor);
    CHECK(make_estimate(3, 1000, 1).resolution_floor);
    CHECK(make_estimate(0, 1000, 1).std_error == 0.0);
    CHECK_THROWS_AS(simulate_op(base(), Network::s2g, IcMode::imperfect, 0, 1), DomainError);
}

TEST_CASE("standard error shrinks as 1/sqrt(trials)") {
    const Scenario s = base(110.0);
    const OutageEstimate a = simulate_op(s, Network::s2g, IcMode::imperfect, 20000, 1);
    const OutageEstimate b = simulate_op(s, Network::s2g, IcMode::imperfect, 320000, 1);
    REQUIRE(a.value > 0.05);
    CHECK(a.std_error / b.std_error == doctest::Approx(4.0).epsilon(0.1));
    CHECK(std::abs(a.value - b.value) < 4 * a.std_error);
}

TEST_CASE("perfect interference cancellation never loses a draw") {
    for (double eta : {100.0, 125.0, 150.0}) {
        const PairedEstimate p = common_random_numbers_compare(base(eta), 50000, 2);
        CHECK(p.min_pointwise == 0);
        CHECK(p.diff >= 0.0);
        CHECK(p.diff_se >= 0.0);
    }
}

TEST_CASE("full split to the primary leaves the secondary in outage") {
    Scenario s = base();
    s.swipt.mu = 1.0;
    CHECK(simulate_op(s, Network::a2a, IcMode::imperfect, 10000, 1).value == 1.0);
    CHECK(simulate_op(s, Network::a2a, IcMode::perfect, 10000, 1).value == 1.0);
}
