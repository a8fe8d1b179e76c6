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

// sagin-outage: command-line front end over the C API.

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "sagin/sagin.h"

namespace {

int exit_for(sagin_status s) {
    switch (s) {
        case SAGIN_OK: return 0;
        case SAGIN_ERR_CONFIG: return 2;
        case SAGIN_ERR_NUMERIC: return 3;
        default: return 1;
    }
}

int report(sagin_status s) {
    std::fprintf(stderr, "sagin-outage: %s\n", sagin_last_error());
    return exit_for(s);
}

void print_warnings(const sagin_config* c) {
    for (size_t i = 0; i < sagin_config_warning_count(c); ++i)
        std::fprintf(stderr, "warning: %s\n", sagin_config_warning(c, i));
}

struct Handle {
    sagin_config* c = nullptr;
    ~Handle() { sagin_config_free(c); }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Outage probability and throughput of an overlay satellite-air-ground network"};
    app.require_subcommand(1);
    app.set_version_flag("--version", sagin_version());

    std::string config, figure, out, fixtures;
    long long trials = -1, seed = -1;

    auto* run = app.add_subcommand("run", "evaluate a sweep and write CSV");
    run->add_option("--config", config, "config file (key = value lines)")->required();
    run->add_option("--figure", figure, "figure preset (fig4 .. fig16)");
    run->add_option("--trials", trials, "Monte Carlo trials per point")->check(CLI::PositiveNumber);
    run->add_option("--seed", seed, "Monte Carlo seed")->check(CLI::NonNegativeNumber);
    run->add_option("--out", out, "output CSV path")->required();

    auto* val = app.add_subcommand("validate", "load and check a config");
    val->add_option("--config", config, "config file")->required();
    val->add_option("--figure", figure, "figure preset");

    auto* oc = app.add_subcommand("oracle-check", "run the special-function oracle suite");
    oc->add_option("--fixtures", fixtures, "fixture file (default: bundled)");

    CLI11_PARSE(app, argc, argv);

    if (*oc) {
        size_t ok = 0, total = 0;
        double worst = 0.0;
        const sagin_status s = sagin_oracle_check(fixtures.empty() ? nullptr : fixtures.c_str(), &ok, &total, &worst);
        std::printf("oracle-check: %zu/%zu passed, max relative error %.3g\n", ok, total, worst);
        return s == SAGIN_OK ? 0 : report(s);
    }

    Handle h;
    sagin_status s = sagin_config_load(config.c_str(), figure.c_str(), &h.c);
    if (s != SAGIN_OK) return report(s);
    if (trials > 0 && (s = sagin_config_set(h.c, "run.trials", std::to_string(trials).c_str())) != SAGIN_OK)
        return report(s);
    if (seed >= 0 && (s = sagin_config_set(h.c, "run.seed", std::to_string(seed).c_str())) != SAGIN_OK)
        return report(s);
    print_warnings(h.c);

    if (*val) {
        double eta_db = 0, gs = 0, ga = 0;
        sagin_config_summary(h.c, &eta_db, &gs, &ga);
        std::printf("ok: sweep %s over %zu points; eta_s = %.4g dB, gamma_S = %.6g, gamma_A = %.6g\n",
                    sagin_config_sweep_var(h.c), sagin_config_grid_size(h.c), eta_db, gs, ga);
        return 0;
    }

    sagin_result* res = nullptr;
    if ((s = sagin_run(h.c, 0, &res)) != SAGIN_OK) return report(s);
    s = sagin_result_write_csv(res, out.c_str());
    const int failed = sagin_result_failed(res);
    sagin_result_free(res);
    if (s != SAGIN_OK) return report(s);
    if (failed) {
        std::fprintf(stderr, "sagin-outage: some points failed under every method (see flags column)\n");
        return 3;
    }
    return 0;
}
