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
#include <cstdio>
#include <fstream>
#include <string>

#include "doctest.h"
#include "sagin/sagin.h"

TEST_CASE("C API: config lifecycle and errors") {
    sagin_config* c = nullptr;
    REQUIRE(sagin_config_parse("swipt.mu = 0.6\n", nullptr, &c) == SAGIN_OK);
    CHECK(sagin_config_grid_size(c) == 25);
    CHECK(std::string(sagin_config_sweep_var(c)) == "link.eta_s_db");
    double eta = 0, gs = 0, ga = 0;
    CHECK(sagin_config_summary(c, &eta, &gs, &ga) == SAGIN_OK);
    CHECK(gs > 0.0);

    CHECK(sagin_config_set(c, "swipt.rho", "2") == SAGIN_ERR_CONFIG);
    CHECK(std::string(sagin_last_error_key()) == "swipt.rho");
    CHECK(std::string(sagin_last_error()).find("swipt.rho") != std::string::npos);
    CHECK(sagin_config_set(c, "swipt.rho", "0.3") == SAGIN_OK);
    CHECK(std::string(sagin_last_error()).empty());
    sagin_config_free(c);

    sagin_config* bad = reinterpret_cast<sagin_config*>(1);
    CHECK(sagin_config_parse("swipt.rho = 1.5", "", &bad) == SAGIN_ERR_CONFIG);
    CHECK(bad == nullptr);
    CHECK(sagin_config_parse("", "fig13", &bad) == SAGIN_ERR_CONFIG);
    CHECK(sagin_config_load("/nonexistent/file.cfg", nullptr, &bad) == SAGIN_ERR_IO);
}

TEST_CASE("C API: null arguments") {
    sagin_config* c = nullptr;
    CHECK(sagin_config_parse(nullptr, nullptr, &c) == SAGIN_ERR_ARGUMENT);
    CHECK(sagin_config_parse("", nullptr, nullptr) == SAGIN_ERR_ARGUMENT);
    CHECK(sagin_config_set(nullptr, "a", "b") == SAGIN_ERR_ARGUMENT);
    double v = 0;
    CHECK(sagin_outage(nullptr, 0, SAGIN_S2G, SAGIN_MC, &v, nullptr) == SAGIN_ERR_ARGUMENT);
    CHECK(sagin_run(nullptr, 1, nullptr) == SAGIN_ERR_ARGUMENT);
    CHECK(sagin_result_rows(nullptr) == 0);
    CHECK(std::isnan(sagin_result_value(nullptr, 0, SAGIN_S2G, SAGIN_MC)));
    CHECK(sagin_result_write_csv(nullptr, "x") == SAGIN_ERR_ARGUMENT);
    CHECK(sagin_config_warning_count(nullptr) == 0);
    sagin_config_free(nullptr);
    sagin_result_free(nullptr);
}

TEST_CASE("C API: evaluation and sweep") {
    sagin_config* c = nullptr;
    REQUIRE(sagin_config_parse("run.trials = 20000\nsweep.values = 115, 125\nrun.methods = mc,integral\n", nullptr,
                               &c) == SAGIN_OK);
    double v = -1, se = -1;
    REQUIRE(sagin_outage(c, 125.0, SAGIN_S2G, SAGIN_INTEGRAL, &v, &se) == SAGIN_OK);
    CHECK(v > 0.0);
    CHECK(v < 1.0);
    CHECK(se == 0.0);
    double m = -1;
    REQUIRE(sagin_outage(c, 125.0, SAGIN_S2G, SAGIN_MC, &m, &se) == SAGIN_OK);
    CHECK(std::abs(m - v) < 4 * se + 1e-3);
    CHECK(sagin_outage(c, 125.0, (sagin_network)7, SAGIN_MC, &m, &se) == SAGIN_ERR_ARGUMENT);
    CHECK(sagin_outage(c, 125.0, SAGIN_S2G, (sagin_method)9, &m, &se) == SAGIN_ERR_ARGUMENT);

    sagin_result* r = nullptr;
    REQUIRE(sagin_run(c, 1, &r) == SAGIN_OK);
    CHECK(sagin_result_rows(r) == 2);
    CHECK(sagin_result_value(r, 1, SAGIN_S2G, SAGIN_INTEGRAL) == doctest::Approx(v));
    CHECK(std::isnan(sagin_result_value(r, 0, SAGIN_S2G, SAGIN_CLOSED)));
    CHECK(std::isnan(sagin_result_value(r, 5, SAGIN_S2G, SAGIN_MC)));
    CHECK(sagin_result_failed(r) == 0);
    const std::string path = "capi_test.csv";
    CHECK(sagin_result_write_csv(r, path.c_str()) == SAGIN_OK);
    std::ifstream f(path);
    std::string header;
    std::getline(f, header);
    CHECK(header.rfind("link.eta_s_db,op_s2g_mc,se_s2g_mc", 0) == 0);
    std::remove(path.c_str());
    CHECK(sagin_result_write_csv(r, "/nonexistent/dir/x.csv") == SAGIN_ERR_IO);
    sagin_result_free(r);
    sagin_config_free(c);
}

TEST_CASE("C API: oracle suite") {
    size_t ok = 0, total = 0;
    double worst = 1;
    CHECK(sagin_oracle_check(nullptr, &ok, &total, &worst) == SAGIN_OK);
    CHECK(total > 100);
    CHECK(ok == total);
    CHECK(worst < 1e-8);
    CHECK(sagin_oracle_check("/nonexistent.csv", &ok, &total, &worst) == SAGIN_ERR_IO);
    CHECK(std::string(sagin_version()).size() > 0);
}
