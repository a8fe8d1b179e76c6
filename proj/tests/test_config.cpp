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
#include <sstream>

#include "config.hpp"
#include "doctest.h"
#include "sweep.hpp"

using namespace sagin;

namespace {

std::string error_key(const std::string& text, const std::string& preset = "") {
    try {
        parse_config(text, preset);
    } catch (const ConfigError& e) {
        return e.key().empty() ? "<none>" : e.key();
    }
    return "";
}

bool has_warning(const ScenarioConfig& c, const std::string& needle) {
    for (const auto& w : c.warnings)
        if (w.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("empty config resolves to the defaults") {
    const ScenarioConfig c = parse_config("");
    CHECK(c.sweep_var == "link.eta_s_db");
    CHECK(c.sweep_values.size() == 25);
    CHECK(c.sweep_values.front() == 90.0);
    CHECK(c.sweep_values.back() == 150.0);
    CHECK(c.base.swipt.P_th == doctest::Approx(0.01));
    CHECK(c.base.noise.sd2 == doctest::Approx(1e-8));
    CHECK(c.base.gamma_s == doctest::Approx(std::pow(2.0, 0.2 / 0.6) - 1.0));
    CHECK(c.base.sr.m == 2.0);
    CHECK(c.trials == 1000000);
    CHECK(c.methods.mc);
    CHECK(c.methods.closed);
    CHECK(c.warnings.empty());
    SatelliteLink link;
    CHECK(c.base.eta_s == doctest::Approx(link.effective_gain()));
}

TEST_CASE("values and comments") {
    const ScenarioConfig c = parse_config(
        "# comment\n"
        "swipt.mu = 0.6   # trailing\n"
        "channel.sr.shadowing = light\n"
        "threshold.gamma_s_db = 3\n"
        "sweep.values = 100, 110\n");
    CHECK(c.base.swipt.mu == 0.6);
    CHECK(c.base.sr.m == 5.0);
    CHECK(c.base.gamma_s == doctest::Approx(std::pow(10.0, 0.3)));
    REQUIRE(c.sweep_values.size() == 2);
    CHECK(scenario_at(c, 110.0).eta_s == doctest::Approx(1e11));
}

TEST_CASE("errors name the offending key") {
    CHECK(error_key("swipt.rho = 1.2") == "swipt.rho");
    CHECK(error_key("swipt.mu = 0") == "swipt.mu");
    CHECK(error_key("swipt.bogus = 1") == "swipt.bogus");
    CHECK(error_key("swipt.chi = abc") == "swipt.chi");
    CHECK(error_key("channel.sr.m = 2.5") == "channel.sr.m");
    CHECK(error_key("channel.sr.m = 2.5\nrun.methods = mc,integral") == "");
    CHECK(error_key("channel.sr.shadowing = medium") == "channel.sr.shadowing");
    CHECK(error_key("geometry.h1_m = 600") == "geometry.h1_m");
    CHECK(error_key("run.methods = fast") == "run.methods");
    CHECK(error_key("run.trials = 1.5") == "run.trials");
    CHECK(error_key("sweep.var = run.seed") == "sweep.var");
    CHECK(error_key("sweep.var = swipt.rho\nsweep.values = 0.2, 1.0") == "sweep.values");
    CHECK(error_key("no equals sign") == "<none>");
    CHECK(error_key("", "fig6") == "<none>");
}

TEST_CASE("warnings") {
    CHECK(has_warning(parse_config("geometry.l_prime_m = 100"), "l_prime"));
    CHECK(has_warning(parse_config("link.eta_s_db = 120\nlink.xi_db = 3"), "eta_s_db"));
    const ScenarioConfig p = parse_config("sweep.from = 0.3", "fig9");
    CHECK(has_warning(p, "fixed by preset"));
    CHECK(p.sweep_var == "swipt.mu");
}

TEST_CASE("presets") {
    const auto names = figure_presets();
    CHECK(names.size() == 11);
    for (const auto& n : names) {
        CAPTURE(n);
        CHECK_NOTHROW(parse_config("", n));
    }
    const ScenarioConfig c = parse_config("", "fig8");
    CHECK(c.base.swipt.P_th == doctest::Approx(1e-3));
    CHECK_FALSE(c.a2a);
}

TEST_CASE("set_config_value re-resolves") {
    ScenarioConfig c = parse_config("");
    set_config_value(c, "swipt.rho", "0.2");
    CHECK(c.base.swipt.rho == 0.2);
    CHECK(c.base.gamma_s == doctest::Approx(std::pow(2.0, 0.25) - 1.0));
    CHECK_THROWS_AS(set_config_value(c, "swipt.rho", "-1"), ConfigError);
}

TEST_CASE("same seed gives byte-identical CSV") {
    const std::string text = "run.trials = 20000\nrun.methods = mc,closed\nsweep.values = 110, 130\n";
    const ScenarioConfig c = parse_config(text);
    std::ostringstream a, b, d;
    write_csv(run_sweep(c, 1), a);
    write_csv(run_sweep(c, 2), b);
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind(csv_header("link.eta_s_db") + "\n", 0) == 0);
    ScenarioConfig c2 = c;
    set_config_value(c2, "run.seed", "2");
    write_csv(run_sweep(c2, 1), d);
    CHECK(a.str() != d.str());
}

TEST_CASE("evaluate_point leaves unrequested entries empty") {
    const ScenarioConfig c = parse_config("run.methods = integral\nrun.networks = s2g\n");
    const PointResult p = evaluate_point(c, 120.0);
    CHECK(std::isnan(p.op[kS2g][kMc]));
    CHECK(std::isnan(p.op[kA2aIm][kIntegral]));
    CHECK(p.op[kS2g][kIntegral] > 0.0);
    CHECK(std::isnan(p.throughput[kIntegral]));
    CHECK_FALSE(p.all_failed);
}
