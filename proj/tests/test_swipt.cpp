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
#include "swipt.hpp"

using namespace sagin;

namespace {

Scenario base() {
    Scenario s;
    s.eta_s = db_to_lin(130.0);
    s.gamma_s = gamma_from_rate(0.1, s.swipt.rho);
    s.gamma_a = gamma_from_rate(0.1, s.swipt.rho);
    return s;
}

}  // namespace

TEST_CASE("rate to threshold") {
    CHECK(gamma_from_rate(0.1, 0.0) == doctest::Approx(std::pow(2.0, 0.2) - 1.0).epsilon(1e-15));
    CHECK(gamma_from_rate(0.1, 0.5) == doctest::Approx(std::pow(2.0, 0.4) - 1.0).epsilon(1e-15));
    CHECK(gamma_from_rate(0.0, 0.3) == 0.0);
    CHECK_THROWS_AS(gamma_from_rate(0.1, 1.0), DomainError);
    CHECK_THROWS_AS(gamma_from_rate(-0.1, 0.2), DomainError);
}

TEST_CASE("relay energy harvesting") {
    SwiptParams p;
    CHECK(p.chi_re() == doctest::Approx(0.6 * (0.8 / 0.6 + 0.4)));
    // linear below the knee, flat above it
    const double eta = 1e12;
    const double w_km = 1000.0;
    const double X_knee = p.P_th * 1e12 / eta;
    CHECK(harvested_power(0.5 * X_knee, w_km, eta, p) == doctest::Approx(p.chi_re() * 0.5 * p.P_th));
    CHECK(harvested_power(3.0 * X_knee, w_km, eta, p) == doctest::Approx(p.chi_re() * p.P_th));
    p.P_th = INFINITY;
    CHECK(harvested_power(3.0 * X_knee, w_km, eta, p) == doctest::Approx(p.chi_re() * 3.0 * 0.01));
}

TEST_CASE("SNR is continuous at the saturation knee") {
    Scenario s = base();
    FadingDraw d = draw_trial(s, 5, 0);
    const double w = 1e3 * d.w_sr;
    d.X = s.swipt.P_th * w * w / s.eta_s;
    FadingDraw lo = d, hi = d;
    lo.X *= 1 - 1e-12;
    hi.X *= 1 + 1e-12;
    CHECK(snr_gu(lo, s) == doctest::Approx(snr_gu(hi, s)).epsilon(1e-9));
    CHECK(snr_arx(lo, s, IcMode::imperfect) == doctest::Approx(snr_arx(hi, s, IcMode::imperfect)).epsilon(1e-9));
}

TEST_CASE("SNR ceilings set by the power split") {
    Scenario s = base();
    const double mu = s.swipt.mu;
    for (std::uint64_t i = 0; i < 2000; ++i) {
        FadingDraw d = draw_trial(s, 7, i);
        d.X *= 1e6;  // push towards the interference-limited regime
        CHECK(snr_gu(d, s) < mu / (1 - mu));
        CHECK(snr_arx(d, s, IcMode::imperfect) < (1 - mu) / mu);
        CHECK(snr_arx(d, s, IcMode::perfect) >= snr_arx(d, s, IcMode::imperfect));
    }
    // no power left for the secondary signal
    s.swipt.mu = 1.0;
    const FadingDraw d = draw_trial(s, 7, 0);
    CHECK(snr_arx(d, s, IcMode::imperfect) == 0.0);
    CHECK(snr_arx(d, s, IcMode::perfect) == 0.0);
}

TEST_CASE("linear-branch success event matches the SNR test") {
    Scenario s = base();
    s.swipt.P_th = INFINITY;
    const Coefficients c = coefficients(s);
    int agree = 0, n = 0;
    for (std::uint64_t i = 0; i < 5000; ++i) {
        const FadingDraw d = draw_trial(s, 11, i);
        const double w = 1e3 * d.w_sr;
        const double lhs_s = d.Y * std::pow(d.w_rd, -s.rd.nu) * (c.A * d.X / (w * w) - c.B);
        const double lhs_a = d.Z * std::pow(d.w_rt, -s.rt.nu) * (c.C * d.X / (w * w) - c.D);
        const double lhs_p = d.Z * std::pow(d.w_rt, -s.rt.nu) * (c.E * d.X / (w * w) - c.D);
        agree += (lhs_s > s.gamma_s * s.noise.sd2) == (snr_gu(d, s) > s.gamma_s);
        agree += (lhs_a > s.gamma_a * s.noise.st2) == (snr_arx(d, s, IcMode::imperfect) > s.gamma_a);
        agree += (lhs_p > s.gamma_a * s.noise.st2) == (snr_arx(d, s, IcMode::perfect) > s.gamma_a);
        n += 3;
    }
    CHECK(agree == n);
}

TEST_CASE("coefficient signs") {
    Scenario s = base();
    s.swipt.mu = 0.5;
    s.gamma_s = 1.0;
    CHECK(coefficients(s).A == doctest::Approx(0.0).epsilon(1e-12));
    s.gamma_s = 1.5;
    CHECK(coefficients(s).A < 0.0);
    s.gamma_a = 0.0;
    CHECK(coefficients(s).C == doctest::Approx(coefficients(s).E));
}

TEST_CASE("parameter validation") {
    SwiptParams p;
    p.rho = 1.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = {};
    p.mu = 0.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    p = {};
    p.P_th = 0.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
    Scenario s = base();
    s.gamma_a = -1.0;
    CHECK_THROWS_AS(s.validate(), DomainError);
}
