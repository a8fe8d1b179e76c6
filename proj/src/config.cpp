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

#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace sagin {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDeg = 0.017453292519943295;

enum class Kind { num, str, boolean, list };

struct KeyDef {
    const char* name;
    const char* def;  // "" = no default (optional / derived)
    Kind kind;
    double lo, hi;
    bool lo_open, hi_open;
    const char* help;
};

// clang-format off
const KeyDef kKeys[] = {
    {"geometry.w_e_km",      "6371",  Kind::num, 0, kInf, true, true,   "earth radius"},
    {"geometry.w_min_km",    "400",   Kind::num, 0, kInf, true, true,   "closest satellite distance"},
    {"geometry.h0_m",        "800",   Kind::num, 0, kInf, true, true,   "ATx altitude"},
    {"geometry.l_m",         "250",   Kind::num, 0, kInf, true, true,   "GU disc radius"},
    {"geometry.l_prime_m",   "200",   Kind::num, 0, kInf, true, true,   "accepted, unused"},
    {"geometry.h1_m",        "400",   Kind::num, 0, kInf, true, true,   "cone near plane"},
    {"geometry.h2_m",        "500",   Kind::num, 0, kInf, true, true,   "cone far plane"},
    {"geometry.phi_rad",     "0.2617993877991494", Kind::num, 0, M_PI / 2, true, true, "cone half-angle"},
    {"channel.sr.shadowing", "heavy", Kind::str, 0, 0, false, false,    "heavy | light"},
    {"channel.sr.m",         "",      Kind::num, 0, kInf, true, true,   "SR severity (default per shadowing)"},
    {"channel.sr.b",         "",      Kind::num, 0, kInf, true, true,   "SR scatter power"},
    {"channel.sr.omega",     "",      Kind::num, 0, kInf, false, true,  "SR LOS power"},
    {"channel.rd.m",         "2",     Kind::num, 0.5, kInf, false, true, "Nakagami m, GU link"},
    {"channel.rd.nu",        "2",     Kind::num, 0, kInf, true, true,   "path-loss exponent, GU link"},
    {"channel.rt.K",         "1",     Kind::num, 0, kInf, false, true,  "Rician K, ARx link"},
    {"channel.rt.nu",        "2",     Kind::num, 0, kInf, true, true,   "path-loss exponent, ARx link"},
    {"link.P_s_w",           "1",     Kind::num, 0, kInf, true, true,   "satellite transmit power"},
    {"link.xi_db",           "2",     Kind::num, -kInf, kInf, true, true, "rain attenuation"},
    {"link.lambda_m",        "0.15",  Kind::num, 0, kInf, true, true,   "carrier wavelength"},
    {"link.T_k",             "300",   Kind::num, 0, kInf, true, true,   "noise temperature"},
    {"link.W_hz",            "15e6",  Kind::num, 0, kInf, true, true,   "bandwidth"},
    {"link.gain_s_db",       "53.45", Kind::num, -kInf, kInf, true, true, "satellite antenna gain"},
    {"link.gain_sr_db",      "4.8",   Kind::num, -kInf, kInf, true, true, "relay antenna gain"},
    {"link.theta_sr_deg",    "0.8",   Kind::num, 0, 90, false, true,    "off-boresight angle"},
    {"link.theta_3db_deg",   "0.3",   Kind::num, 0, 90, true, true,     "3 dB beam angle"},
    {"link.eta_s_db",        "",      Kind::num, -kInf, kInf, true, true, "eta_s directly (wins over link.*)"},
    {"swipt.chi",            "0.6",   Kind::num, 0, 1, true, false,     "conversion efficiency"},
    {"swipt.rho",            "0.4",   Kind::num, 0, 1, false, true,     "time-switching fraction"},
    {"swipt.eps",            "0.4",   Kind::num, 0, 1, true, true,      "power-splitting fraction"},
    {"swipt.mu",             "0.7",   Kind::num, 0, 1, true, false,     "power share for the satellite signal"},
    {"swipt.P_th_dbm",       "10",    Kind::num, -kInf, kInf, true, true, "EH saturation threshold"},
    {"swipt.linear_eh",      "false", Kind::boolean, 0, 0, false, false, "ignore saturation"},
    {"swipt.T",              "1",     Kind::num, 0, kInf, true, true,   "block duration"},
    {"noise.sigma_r2_dbm",   "-50",   Kind::num, -kInf, kInf, true, true, ""},
    {"noise.sigma_rb2_dbm",  "-50",   Kind::num, -kInf, kInf, true, true, ""},
    {"noise.sigma_d2_dbm",   "-50",   Kind::num, -kInf, kInf, true, true, ""},
    {"noise.sigma_t2_dbm",   "-50",   Kind::num, -kInf, kInf, true, true, ""},
    {"rate.r_s",             "0.1",   Kind::num, 0, kInf, false, true,  "target rate S2G, bits/s/Hz"},
    {"rate.r_a",             "0.1",   Kind::num, 0, kInf, false, true,  "target rate A2A, bits/s/Hz"},
    {"threshold.gamma_s",    "",      Kind::num, 0, kInf, false, true,  "SNR threshold (linear); default from rate"},
    {"threshold.gamma_a",    "",      Kind::num, 0, kInf, false, true,  ""},
    {"threshold.gamma_s_db", "",      Kind::num, -kInf, kInf, true, true, ""},
    {"threshold.gamma_a_db", "",      Kind::num, -kInf, kInf, true, true, ""},
    {"run.methods",          "mc,closed,integral", Kind::list, 0, 0, false, false, ""},
    {"run.networks",         "s2g,a2a", Kind::list, 0, 0, false, false, ""},
    {"run.throughput_ic",    "im",    Kind::str, 0, 0, false, false,    "im | p"},
    {"run.trials",           "1000000", Kind::num, 1, 1e12, false, false, ""},
    {"run.seed",             "1",     Kind::num, 0, 1.8e19, false, false, ""},
    {"series.cgq_n",         "100",   Kind::num, 2, 100000, false, false, ""},
    {"series.rel_tol",       "1e-12", Kind::num, 0, 1e-6, true, false,  ""},
    {"series.cap",           "200",   Kind::num, 16, 100000, false, false, ""},
    {"sweep.var",            "link.eta_s_db", Kind::str, 0, 0, false, false, ""},
    {"sweep.from",           "90",    Kind::num, -kInf, kInf, true, true, ""},
    {"sweep.to",             "150",   Kind::num, -kInf, kInf, true, true, ""},
    {"sweep.step",           "2.5",   Kind::num, 0, kInf, true, true,   ""},
    {"sweep.values",         "",      Kind::list, 0, 0, false, false,   "explicit grid, overrides from/to/step"},
};
// clang-format on

const KeyDef* find_key(const std::string& k) {
    for (const auto& d : kKeys)
        if (k == d.name) return &d;
    return nullptr;
}

struct Preset {
    const char* name;
    std::vector<std::pair<const char*, const char*>> kv;
};

// Sweep keys of a preset cannot be overridden by the file; the rest can.
const std::vector<Preset>& presets() {
    static const std::vector<Preset> p = {
        {"fig4", {{"sweep.var", "link.eta_s_db"}, {"sweep.from", "90"}, {"sweep.to", "150"}, {"sweep.step", "2.5"},
                  {"run.networks", "s2g"}}},
        {"fig5", {{"sweep.var", "swipt.rho"}, {"sweep.from", "0.05"}, {"sweep.to", "0.9"}, {"sweep.step", "0.05"},
                  {"link.eta_s_db", "130"}, {"run.networks", "s2g"}}},
        {"fig7", {{"sweep.var", "link.eta_s_db"}, {"sweep.from", "90"}, {"sweep.to", "150"}, {"sweep.step", "2.5"},
                  {"geometry.h0_m", "700"}, {"geometry.l_m", "300"}, {"geometry.w_min_km", "370"},
                  {"run.networks", "s2g"}}},
        {"fig8", {{"sweep.var", "link.eta_s_db"}, {"sweep.from", "90"}, {"sweep.to", "150"}, {"sweep.step", "2.5"},
                  {"swipt.P_th_dbm", "0"}, {"run.networks", "s2g"}}},
        {"fig9", {{"sweep.var", "swipt.mu"}, {"sweep.from", "0.3"}, {"sweep.to", "0.95"}, {"sweep.step", "0.05"},
                  {"threshold.gamma_s", "1"}, {"link.eta_s_db", "130"}, {"run.networks", "s2g"}}},
        {"fig10", {{"sweep.var", "link.eta_s_db"}, {"sweep.from", "90"}, {"sweep.to", "150"}, {"sweep.step", "2.5"},
                   {"run.networks", "a2a"}}},
        {"fig11", {{"sweep.var", "link.eta_s_db"}, {"sweep.from", "90"}, {"sweep.to", "150"}, {"sweep.step", "2.5"},
                   {"swipt.P_th_dbm", "0"}, {"run.networks", "a2a"}}},
        {"fig12", {{"sweep.var", "swipt.rho"}, {"sweep.from", "0.05"}, {"sweep.to", "0.9"}, {"sweep.step", "0.05"},
                   {"link.eta_s_db", "130"}, {"run.networks", "a2a"}}},
        {"fig14", {{"sweep.var", "link.eta_s_db"}, {"sweep.from", "90"}, {"sweep.to", "150"}, {"sweep.step", "2.5"},
                   {"geometry.h0_m", "700"}, {"geometry.phi_rad", "0.3141592653589793"},
                   {"geometry.w_min_km", "350"}, {"run.networks", "a2a"}}},
        {"fig15", {{"sweep.var", "link.eta_s_db"}, {"sweep.from", "90"}, {"sweep.to", "150"}, {"sweep.step", "2.5"},
                   {"rate.r_s", "0.02"}, {"rate.r_a", "0.02"}}},
        {"fig16", {{"sweep.var", "link.eta_s_db"}, {"sweep.from", "90"}, {"sweep.to", "150"}, {"sweep.step", "2.5"},
                   {"rate.r_s", "0.02"}, {"rate.r_a", "0.02"}}},
    };
    return p;
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

double parse_number(const std::string& key, const std::string& v) {
    std::string t = trim(v);
    std::string low = t;
    std::transform(low.begin(), low.end(), low.begin(), ::tolower);
    if (low == "inf" || low == "+inf") return kInf;
    if (low == "-inf") return -kInf;
    try {
        size_t pos = 0;
        const double x = std::stod(t, &pos);
        if (pos != t.size() || std::isnan(x)) throw std::invalid_argument("");
        return x;
    } catch (const std::exception&) {
        throw ConfigError(key, "expected a number, got '" + v + "'");
    }
}

std::string fmt(double x) {
    char b[40];
    std::snprintf(b, sizeof b, "%.17g", x);
    return b;
}

void check_range(const KeyDef& d, double x) {
    const bool lo_ok = d.lo_open ? x > d.lo : x >= d.lo;
    const bool hi_ok = d.hi_open ? x < d.hi : x <= d.hi;
    if (lo_ok && hi_ok) return;
    char b[160];
    std::snprintf(b, sizeof b, "value %g outside %c%g, %g%c", x, d.lo_open ? '(' : '[', d.lo, d.hi,
                  d.hi_open ? ')' : ']');
    throw ConfigError(d.name, b);
}

class View {
public:
    explicit View(const std::map<std::string, std::string>& raw) : raw_(raw) {}

    bool has(const std::string& k) const { return raw_.count(k) != 0; }
    std::string str(const std::string& k) const {
        auto it = raw_.find(k);
        return it != raw_.end() ? trim(it->second) : find_key(k)->def;
    }
    double num(const std::string& k) const {
        const KeyDef* d = find_key(k);
        const double x = parse_number(k, str(k));
        check_range(*d, x);
        return x;
    }
    bool boolean(const std::string& k) const {
        std::string v = str(k);
        std::transform(v.begin(), v.end(), v.begin(), ::tolower);
        if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
        if (v == "false" || v == "0" || v == "no" || v == "off") return false;
        throw ConfigError(k, "expected true/false, got '" + v + "'");
    }

private:
    const std::map<std::string, std::string>& raw_;
};

Scenario resolve_scenario(const std::map<std::string, std::string>& raw, std::vector<std::string>* warn) {
    View v(raw);
    Scenario s;
    s.orbit.w_e = v.num("geometry.w_e_km");
    s.orbit.w_min = v.num("geometry.w_min_km");
    s.orbit.h_0 = v.num("geometry.h0_m") / 1e3;
    s.cone.h_0 = v.num("geometry.h0_m");
    s.cone.l = v.num("geometry.l_m");
    s.cone.h_1 = v.num("geometry.h1_m");
    s.cone.h_2 = v.num("geometry.h2_m");
    s.cone.phi = v.num("geometry.phi_rad");
    v.num("geometry.l_prime_m");
    if (warn && v.has("geometry.l_prime_m"))
        warn->push_back("geometry.l_prime_m is accepted but does not enter any expression; ignored");
    if (!(s.cone.h_1 < s.cone.h_2)) throw ConfigError("geometry.h1_m", "must be smaller than geometry.h2_m");

    const std::string sh = v.str("channel.sr.shadowing");
    if (sh == "heavy") s.sr = {2.0, 0.063, 0.0005};
    else if (sh == "light") s.sr = {5.0, 0.251, 0.279};
    else throw ConfigError("channel.sr.shadowing", "expected 'heavy' or 'light', got '" + sh + "'");
    if (v.has("channel.sr.m")) s.sr.m = v.num("channel.sr.m");
    if (v.has("channel.sr.b")) s.sr.b = v.num("channel.sr.b");
    if (v.has("channel.sr.omega")) s.sr.omega = v.num("channel.sr.omega");
    s.rd.m = v.num("channel.rd.m");
    s.rd.nu = v.num("channel.rd.nu");
    s.rt.K = v.num("channel.rt.K");
    s.rt.nu = v.num("channel.rt.nu");

    SatelliteLink link;
    link.P_s = v.num("link.P_s_w");
    link.xi_db = v.num("link.xi_db");
    link.lambda = v.num("link.lambda_m");
    link.T_noise = v.num("link.T_k");
    link.bandwidth = v.num("link.W_hz");
    link.gain_s_db = v.num("link.gain_s_db");
    link.gain_sr_db = v.num("link.gain_sr_db");
    link.theta_sr = v.num("link.theta_sr_deg") * kDeg;
    link.theta_3db = v.num("link.theta_3db_deg") * kDeg;
    if (v.has("link.eta_s_db")) {
        s.eta_s = db_to_lin(v.num("link.eta_s_db"));
        if (warn)
            for (const auto& [k, _] : raw)
                if (k.rfind("link.", 0) == 0 && k != "link.eta_s_db") {
                    warn->push_back("link.eta_s_db is set; derived value from link.* constants is ignored");
                    break;
                }
    } else {
        try {
            link.validate();
        } catch (const DomainError& e) {
            throw ConfigError("", e.what());
        }
        s.eta_s = link.effective_gain();
    }
    if (!(std::isfinite(s.eta_s) && s.eta_s > 0.0)) throw ConfigError("link.eta_s_db", "eta_s must be finite");

    s.swipt.chi = v.num("swipt.chi");
    s.swipt.rho = v.num("swipt.rho");
    s.swipt.eps = v.num("swipt.eps");
    s.swipt.mu = v.num("swipt.mu");
    s.swipt.T_block = v.num("swipt.T");
    s.swipt.P_th = v.boolean("swipt.linear_eh") ? kInf : dbm_to_watt(v.num("swipt.P_th_dbm"));

    s.noise.sr2 = dbm_to_watt(v.num("noise.sigma_r2_dbm"));
    s.noise.srb2 = dbm_to_watt(v.num("noise.sigma_rb2_dbm"));
    s.noise.sd2 = dbm_to_watt(v.num("noise.sigma_d2_dbm"));
    s.noise.st2 = dbm_to_watt(v.num("noise.sigma_t2_dbm"));

    auto threshold = [&](const char* lin, const char* db, const char* rate) {
        if (v.has(lin) && v.has(db)) throw ConfigError(db, std::string("conflicts with ") + lin);
        if (v.has(lin)) return v.num(lin);
        if (v.has(db)) return db_to_lin(v.num(db));
        return gamma_from_rate(v.num(rate), s.swipt.rho);
    };
    s.gamma_s = threshold("threshold.gamma_s", "threshold.gamma_s_db", "rate.r_s");
    s.gamma_a = threshold("threshold.gamma_a", "threshold.gamma_a_db", "rate.r_a");
    if (!std::isfinite(s.gamma_s) || !std::isfinite(s.gamma_a))
        throw ConfigError("rate.r_s", "rate gives a non-finite SNR threshold");

    try {
        s.validate();
    } catch (const DomainError& e) {
        throw ConfigError("", e.what());
    }
    return s;
}

bool is_integer(double x) { return std::isfinite(x) && x == std::floor(x); }

void resolve(ScenarioConfig& c) {
    for (const auto& [k, _] : c.raw)
        if (!find_key(k)) throw ConfigError(k, "unknown key");
    c.warnings.clear();
    c.base = resolve_scenario(c.raw, &c.warnings);
    View v(c.raw);

    c.methods = {false, false, false};
    for (const auto& m : split_list(v.str("run.methods"))) {
        if (m == "mc") c.methods.mc = true;
        else if (m == "closed") c.methods.closed = true;
        else if (m == "integral") c.methods.integral = true;
        else throw ConfigError("run.methods", "unknown method '" + m + "' (mc, closed, integral)");
    }
    if (!(c.methods.mc || c.methods.closed || c.methods.integral))
        throw ConfigError("run.methods", "no method selected");
    c.s2g = c.a2a = false;
    for (const auto& n : split_list(v.str("run.networks"))) {
        if (n == "s2g") c.s2g = true;
        else if (n == "a2a") c.a2a = true;
        else throw ConfigError("run.networks", "unknown network '" + n + "' (s2g, a2a)");
    }
    if (!(c.s2g || c.a2a)) throw ConfigError("run.networks", "no network selected");
    const std::string ic = v.str("run.throughput_ic");
    if (ic == "im") c.throughput_mode = IcMode::imperfect;
    else if (ic == "p") c.throughput_mode = IcMode::perfect;
    else throw ConfigError("run.throughput_ic", "expected 'im' or 'p'");

    c.r_s = v.num("rate.r_s");
    c.r_a = v.num("rate.r_a");
    const double tr = v.num("run.trials"), sd = v.num("run.seed");
    if (!is_integer(tr)) throw ConfigError("run.trials", "must be an integer");
    if (!is_integer(sd)) throw ConfigError("run.seed", "must be an integer");
    c.trials = std::uint64_t(tr);
    c.seed = std::uint64_t(sd);
    c.series.cgq_n = int(v.num("series.cgq_n"));
    c.series.rel_tol = v.num("series.rel_tol");
    c.series.cap = int(v.num("series.cap"));

    // the series path sums over integer-m finite expansions
    if (c.methods.closed) {
        if (!c.base.sr.integer_m())
            throw ConfigError("channel.sr.m",
                              "method 'closed' requires an integer m (finite-sum form of the satellite-link pdf); "
                              "use run.methods = mc,integral for non-integer m");
        if (c.s2g && !is_integer(c.base.rd.m))
            throw ConfigError("channel.rd.m",
                              "method 'closed' requires an integer m (finite Nakagami tail sum); "
                              "use run.methods = mc,integral for non-integer m");
    }

    c.sweep_var = v.str("sweep.var");
    const KeyDef* sv = find_key(c.sweep_var);
    if (!sv || sv->kind != Kind::num || c.sweep_var.rfind("run.", 0) == 0 ||
        c.sweep_var.rfind("sweep.", 0) == 0 || c.sweep_var.rfind("series.", 0) == 0)
        throw ConfigError("sweep.var", "'" + c.sweep_var + "' is not a sweepable numeric key");
    c.sweep_values.clear();
    if (v.has("sweep.values")) {
        for (const auto& t : split_list(v.str("sweep.values")))
            c.sweep_values.push_back(parse_number("sweep.values", t));
        if (c.sweep_values.empty()) throw ConfigError("sweep.values", "empty grid");
    } else {
        const double a = v.num("sweep.from"), b = v.num("sweep.to"), h = v.num("sweep.step");
        if (b < a) throw ConfigError("sweep.to", "must be >= sweep.from");
        const double n = std::floor((b - a) / h + 1e-9) + 1;
        if (n > 100000) throw ConfigError("sweep.step", "grid too large");
        for (int i = 0; i < int(n); ++i) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.12g", a + i * h);
            c.sweep_values.push_back(std::stod(buf));
        }
    }
    for (double x : c.sweep_values) {
        try {
            check_range(*sv, x);
        } catch (const ConfigError&) {
            throw ConfigError("sweep.values", "grid value " + fmt(x) + " out of range for " + c.sweep_var);
        }
    }
    if (c.methods.closed && (c.sweep_var == "channel.sr.m" || (c.s2g && c.sweep_var == "channel.rd.m")))
        for (double x : c.sweep_values)
            if (!is_integer(x))
                throw ConfigError(c.sweep_var, "method 'closed' requires integer m; grid value " + fmt(x));
    // every grid point must resolve
    for (double x : c.sweep_values) scenario_at(c, x);
}

}  // namespace

ScenarioConfig parse_config(const std::string& text, const std::string& preset) {
    ScenarioConfig c;
    std::set<std::string> fixed;
    if (!preset.empty()) {
        const auto& ps = presets();
        auto it = std::find_if(ps.begin(), ps.end(), [&](const Preset& p) { return preset == p.name; });
        if (it == ps.end()) throw ConfigError("", "unknown figure preset '" + preset + "'");
        for (const auto& [k, val] : it->kv) {
            c.raw[k] = val;
            if (std::string(k).rfind("sweep.", 0) == 0) fixed.insert(k);
        }
        c.preset = preset;
    }
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> pending;
    for (int ln = 1; std::getline(in, line); ++ln) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("", "line " + std::to_string(ln) + ": expected 'key = value'");
        const std::string k = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
        if (!find_key(k)) throw ConfigError(k, "unknown key (line " + std::to_string(ln) + ")");
        if (val.empty()) throw ConfigError(k, "empty value (line " + std::to_string(ln) + ")");
        if (fixed.count(k) || (!fixed.empty() && k == "sweep.values")) {
            pending.push_back(k + " is fixed by preset " + preset + "; file value ignored");
            continue;
        }
        c.raw[k] = val;
    }
    resolve(c);
    c.warnings.insert(c.warnings.end(), pending.begin(), pending.end());
    return c;
}

ScenarioConfig load_config(const std::string& path, const std::string& preset) {
    std::ifstream f(path);
    if (!f) throw ConfigError("", "cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str(), preset);
}

Scenario scenario_at(const ScenarioConfig& c, double x) {
    auto raw = c.raw;
    raw[c.sweep_var] = fmt(x);
    return resolve_scenario(raw, nullptr);
}

void set_config_value(ScenarioConfig& c, const std::string& key, const std::string& value) {
    if (!find_key(key)) throw ConfigError(key, "unknown key");
    auto saved = c.raw;
    c.raw[key] = value;
    try {
        resolve(c);
    } catch (...) {
        c.raw = saved;
        resolve(c);
        throw;
    }
}

const std::vector<KeyInfo>& config_keys() {
    static const std::vector<KeyInfo> keys = [] {
        std::vector<KeyInfo> k;
        for (const auto& d : kKeys) k.push_back({d.name, d.def, d.help});
        return k;
    }();
    return keys;
}

std::vector<std::string> figure_presets() {
    std::vector<std::string> n;
    for (const auto& p : presets()) n.push_back(p.name);
    return n;
}

}  // namespace sagin
