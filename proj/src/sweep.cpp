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

#include "sweep.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <thread>

#include "mc.hpp"

namespace sagin {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
const char* kLinkName[3] = {"s2g", "a2a_im", "a2a_p"};
const char* kMethodName[3] = {"mc", "closed", "integral"};

std::string sanitize(std::string s) {
    for (char& ch : s)
        if (ch == ',' || ch == '\n' || ch == '\r' || ch == ';') ch = ' ';
    return s;
}

void note_diag(PointResult& p, int link, const OpDiagnostics& d) {
    const std::string tag = kLinkName[link];
    if (d.truncated) p.flags.push_back("truncated:" + tag);
    if (d.clamp_excess > 1e-6) p.flags.push_back("clamped:" + tag);
    if (d.route.find("cgq2d") != std::string::npos) p.flags.push_back("quadrature_fallback:" + tag);
}

}  // namespace

bool SweepResult::any_all_failed() const {
    for (const auto& r : rows)
        if (r.all_failed) return true;
    return false;
}

PointResult evaluate_point(const ScenarioConfig& c, double x, unsigned mc_workers) {
    PointResult p;
    p.x = x;
    for (auto& row : p.op) row.fill(kNaN);
    p.mc_se.fill(kNaN);
    p.throughput.fill(kNaN);

    Scenario s;
    try {
        s = scenario_at(c, x);
    } catch (const std::exception& e) {
        p.flags.push_back("error:" + sanitize(e.what()));
        p.all_failed = true;
        return p;
    }
    const bool want[3] = {c.s2g, c.a2a, c.a2a};
    const bool use[3] = {c.methods.mc, c.methods.closed, c.methods.integral};

    if (use[kMc]) {
        try {
            const McCounts m = simulate_counts(s, c.trials, c.seed, mc_workers);
            const std::uint64_t fails[3] = {m.s2g, m.a2a_im, m.a2a_p};
            for (int l = 0; l < 3; ++l) {
                if (!want[l]) continue;
                const OutageEstimate e = make_estimate(fails[l], m.trials, c.seed);
                p.op[l][kMc] = e.value;
                p.mc_se[l] = e.std_error;
                if (e.resolution_floor) p.flags.push_back(std::string("mc_floor:") + kLinkName[l]);
            }
        } catch (const std::exception& e) {
            p.flags.push_back("error:mc:" + sanitize(e.what()));
        }
    }
    for (int l = 0; l < 3; ++l) {
        if (!want[l]) continue;
        const IcMode mode = l == kA2aP ? IcMode::perfect : IcMode::imperfect;
        for (int meth : {kClosed, kIntegral}) {
            if (!use[meth]) continue;
            try {
                OpResult r;
                if (meth == kClosed)
                    r = l == kS2g ? op_s2g_closed(s, c.series) : op_a2a_closed(s, mode, c.series);
                else
                    r = l == kS2g ? op_s2g_integral(s) : op_a2a_integral(s, mode);
                p.op[l][meth] = r.value;
                note_diag(p, l, r.diag);
            } catch (const std::exception& e) {
                p.flags.push_back(std::string("error:") + kLinkName[l] + "/" + kMethodName[meth] + ":" +
                                  sanitize(e.what()));
            }
        }
        bool any = false;
        for (int meth = 0; meth < 3; ++meth) any = any || (use[meth] && !std::isnan(p.op[l][meth]));
        if (!any) p.all_failed = true;
    }
    if (c.s2g && c.a2a) {
        const int la = c.throughput_mode == IcMode::perfect ? kA2aP : kA2aIm;
        for (int meth = 0; meth < 3; ++meth)
            if (!std::isnan(p.op[kS2g][meth]) && !std::isnan(p.op[la][meth]))
                p.throughput[meth] = avg_throughput(s.swipt.rho, s.swipt.T_block, c.r_s, c.r_a,
                                                    p.op[kS2g][meth], p.op[la][meth]);
    }
    return p;
}

SweepResult run_sweep(const ScenarioConfig& c, unsigned workers) {
    SweepResult r;
    r.var = c.sweep_var;
    const size_t n = c.sweep_values.size();
    r.rows.resize(n);
    workers = std::max(1u, workers);
    const unsigned pool = unsigned(std::min<size_t>(workers, n));
    const unsigned mc_workers = std::max(1u, workers / std::max(1u, pool));
    std::atomic<size_t> next{0};
    auto work = [&] {
        for (size_t i; (i = next.fetch_add(1)) < n;) r.rows[i] = evaluate_point(c, c.sweep_values[i], mc_workers);
    };
    if (pool <= 1) {
        work();
    } else {
        std::vector<std::thread> th;
        for (unsigned k = 0; k < pool; ++k) th.emplace_back(work);
        for (auto& t : th) t.join();
    }
    return r;
}

std::string csv_header(const std::string& var) {
    std::string h = var;
    for (int l = 0; l < 3; ++l) {
        h += std::string(",op_") + kLinkName[l] + "_mc,se_" + kLinkName[l] + "_mc";
        h += std::string(",op_") + kLinkName[l] + "_closed,op_" + kLinkName[l] + "_integral";
    }
    h += ",throughput_mc,throughput_closed,throughput_integral,flags";
    return h;
}

void write_csv(const SweepResult& r, std::ostream& out) {
    auto num = [](double v) {
        if (std::isnan(v)) return std::string("nan");
        char b[40];
        std::snprintf(b, sizeof b, "%.10g", v);
        return std::string(b);
    };
    out << csv_header(r.var) << '\n';
    for (const auto& p : r.rows) {
        out << num(p.x);
        for (int l = 0; l < 3; ++l)
            out << ',' << num(p.op[l][kMc]) << ',' << num(p.mc_se[l]) << ',' << num(p.op[l][kClosed]) << ','
                << num(p.op[l][kIntegral]);
        for (int m = 0; m < 3; ++m) out << ',' << num(p.throughput[m]);
        out << ',';
        for (size_t i = 0; i < p.flags.size(); ++i) out << (i ? ";" : "") << p.flags[i];
        out << '\n';
    }
}

}  // namespace sagin
