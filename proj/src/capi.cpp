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

#include "sagin/sagin.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <string>

#include "config.hpp"
#include "fixtures.hpp"
#include "mc.hpp"
#include "sweep.hpp"

struct sagin_config {
    sagin::ScenarioConfig c;
};

struct sagin_result {
    sagin::SweepResult r;
};

namespace {

thread_local std::string g_error;
thread_local std::string g_error_key;

sagin_status fail(sagin_status s, const std::string& msg, const std::string& key = "") {
    g_error = msg;
    g_error_key = key;
    return s;
}

// Translate exceptions at the boundary.
template <class F>
sagin_status guarded(F&& f) {
    g_error.clear();
    g_error_key.clear();
    try {
        return f();
    } catch (const sagin::ConfigError& e) {
        return fail(SAGIN_ERR_CONFIG, e.what(), e.key());
    } catch (const sagin::DomainError& e) {
        return fail(SAGIN_ERR_CONFIG, e.what());
    } catch (const sagin::NumericError& e) {
        return fail(SAGIN_ERR_NUMERIC, e.what());
    } catch (const std::bad_alloc&) {
        return fail(SAGIN_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(SAGIN_ERR_NUMERIC, e.what());
    }
}

std::string opt(const char* s) { return s ? s : ""; }

}  // namespace

extern "C" {

const char* sagin_version(void) { return "1.0.0"; }
const char* sagin_last_error(void) { return g_error.c_str(); }
const char* sagin_last_error_key(void) { return g_error_key.c_str(); }

sagin_status sagin_config_load(const char* path, const char* preset, sagin_config** out) {
    if (!path || !out) return fail(SAGIN_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    {
        std::ifstream f(path);
        if (!f) return fail(SAGIN_ERR_IO, std::string("cannot read config file '") + path + "'");
    }
    return guarded([&] {
        *out = new sagin_config{sagin::load_config(path, opt(preset))};
        return SAGIN_OK;
    });
}

sagin_status sagin_config_parse(const char* text, const char* preset, sagin_config** out) {
    if (!text || !out) return fail(SAGIN_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        *out = new sagin_config{sagin::parse_config(text, opt(preset))};
        return SAGIN_OK;
    });
}

sagin_status sagin_config_set(sagin_config* cfg, const char* key, const char* value) {
    if (!cfg || !key || !value) return fail(SAGIN_ERR_ARGUMENT, "null argument");
    return guarded([&] {
        sagin::set_config_value(cfg->c, key, value);
        return SAGIN_OK;
    });
}

size_t sagin_config_warning_count(const sagin_config* cfg) { return cfg ? cfg->c.warnings.size() : 0; }

const char* sagin_config_warning(const sagin_config* cfg, size_t i) {
    if (!cfg || i >= cfg->c.warnings.size()) return "";
    return cfg->c.warnings[i].c_str();
}

size_t sagin_config_grid_size(const sagin_config* cfg) { return cfg ? cfg->c.sweep_values.size() : 0; }

const char* sagin_config_sweep_var(const sagin_config* cfg) { return cfg ? cfg->c.sweep_var.c_str() : ""; }

sagin_status sagin_config_summary(const sagin_config* cfg, double* eta_s_db, double* gamma_s, double* gamma_a) {
    if (!cfg) return fail(SAGIN_ERR_ARGUMENT, "null handle");
    if (eta_s_db) *eta_s_db = sagin::lin_to_db(cfg->c.base.eta_s);
    if (gamma_s) *gamma_s = cfg->c.base.gamma_s;
    if (gamma_a) *gamma_a = cfg->c.base.gamma_a;
    return SAGIN_OK;
}

void sagin_config_free(sagin_config* cfg) { delete cfg; }

sagin_status sagin_outage(const sagin_config* cfg, double x, sagin_network net, sagin_method method,
                          double* value, double* std_error) {
    if (!cfg || !value) return fail(SAGIN_ERR_ARGUMENT, "null argument");
    if (net < SAGIN_S2G || net > SAGIN_A2A_P) return fail(SAGIN_ERR_ARGUMENT, "bad network");
    if (method < SAGIN_MC || method > SAGIN_INTEGRAL) return fail(SAGIN_ERR_ARGUMENT, "bad method");
    return guarded([&] {
        using namespace sagin;
        const Scenario s = scenario_at(cfg->c, x);
        const IcMode mode = net == SAGIN_A2A_P ? IcMode::perfect : IcMode::imperfect;
        double se = 0.0;
        if (method == SAGIN_MC) {
            const OutageEstimate e = net == SAGIN_S2G
                                         ? simulate_op(s, Network::s2g, mode, cfg->c.trials, cfg->c.seed)
                                         : simulate_op(s, Network::a2a, mode, cfg->c.trials, cfg->c.seed);
            *value = e.value;
            se = e.std_error;
        } else if (method == SAGIN_CLOSED) {
            *value = (net == SAGIN_S2G ? op_s2g_closed(s, cfg->c.series) : op_a2a_closed(s, mode, cfg->c.series)).value;
        } else {
            *value = (net == SAGIN_S2G ? op_s2g_integral(s) : op_a2a_integral(s, mode)).value;
        }
        if (std_error) *std_error = se;
        return SAGIN_OK;
    });
}

sagin_status sagin_run(const sagin_config* cfg, unsigned workers, sagin_result** out) {
    if (!cfg || !out) return fail(SAGIN_ERR_ARGUMENT, "null argument");
    *out = nullptr;
    return guarded([&] {
        *out = new sagin_result{sagin::run_sweep(cfg->c, workers ? workers : sagin::worker_count())};
        return SAGIN_OK;
    });
}

size_t sagin_result_rows(const sagin_result* res) { return res ? res->r.rows.size() : 0; }

double sagin_result_value(const sagin_result* res, size_t row, sagin_network net, sagin_method method) {
    if (!res || row >= res->r.rows.size() || net < 0 || net > 2 || method < 0 || method > 2)
        return std::numeric_limits<double>::quiet_NaN();
    return res->r.rows[row].op[net][method];
}

int sagin_result_failed(const sagin_result* res) { return res && res->r.any_all_failed() ? 1 : 0; }

sagin_status sagin_result_write_csv(const sagin_result* res, const char* path) {
    if (!res || !path) return fail(SAGIN_ERR_ARGUMENT, "null argument");
    std::ofstream f(path, std::ios::binary);
    if (!f) return fail(SAGIN_ERR_IO, std::string("cannot write '") + path + "'");
    sagin::write_csv(res->r, f);
    f.flush();
    if (!f) return fail(SAGIN_ERR_IO, std::string("write failed for '") + path + "'");
    return SAGIN_OK;
}

void sagin_result_free(sagin_result* res) { delete res; }

sagin_status sagin_oracle_check(const char* path, size_t* passed, size_t* total, double* max_rel_err) {
    return guarded([&] {
        const std::string p = path && *path ? path : sagin::default_fixture_path();
        std::vector<sagin::FixtureRow> rows;
        try {
            rows = sagin::load_fixtures(p);
        } catch (const std::exception& e) {
            return fail(SAGIN_ERR_IO, e.what());
        }
        const auto res = sagin::check_fixtures(rows);
        size_t ok = 0;
        double worst = 0.0;
        for (const auto& r : res) {
            ok += r.ok;
            if (std::isfinite(r.rel_err)) worst = std::max(worst, r.rel_err);
        }
        if (passed) *passed = ok;
        if (total) *total = res.size();
        if (max_rel_err) *max_rel_err = worst;
        if (ok != res.size()) return fail(SAGIN_ERR_NUMERIC, "oracle check: " + std::to_string(res.size() - ok) + " failures");
        return SAGIN_OK;
    });
}

}  // extern "C"
