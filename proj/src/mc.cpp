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

#include "mc.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <vector>

namespace sagin {

unsigned worker_count() {
    if (const char* e = std::getenv("SAGIN_THREADS")) {
        const long v = std::strtol(e, nullptr, 10);
        if (v > 0) return unsigned(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

FadingDraw draw_trial(const Scenario& s, std::uint64_t seed, std::uint64_t index) {
    Rng rng(seed, index);
    FadingDraw d;
    d.w_sr = sample_satellite_distance(rng, s.orbit);
    d.X = sample_shadowed_rician_power(rng, s.sr);
    d.w_rd = sample_gu_distance(rng, s.cone);
    d.Y = sample_nakagami_power(rng, s.rd);
    d.w_rt = sample_arx_distance(rng, s.cone);
    d.Z = sample_rician_power(rng, s.rt);
    return d;
}

namespace {

struct Tally {
    std::uint64_t s2g = 0, a2a_im = 0, a2a_p = 0, lin = 0, p_only = 0;
};

Tally run_range(const Scenario& s, std::uint64_t seed, std::uint64_t lo, std::uint64_t hi) {
    Tally t;
    for (std::uint64_t i = lo; i < hi; ++i) {
        const FadingDraw d = draw_trial(s, seed, i);
        const double w = 1e3 * d.w_sr;
        if (s.eta_s * d.X / (w * w) <= s.swipt.P_th) ++t.lin;
        const bool o_s = snr_gu(d, s) < s.gamma_s;
        const bool o_im = snr_arx(d, s, IcMode::imperfect) < s.gamma_a;
        const bool o_p = snr_arx(d, s, IcMode::perfect) < s.gamma_a;
        t.s2g += o_s;
        t.a2a_im += o_im;
        t.a2a_p += o_p;
        t.p_only += (o_p && !o_im);
    }
    return t;
}

Tally run_parallel(const Scenario& s, std::uint64_t trials, std::uint64_t seed, unsigned workers) {
    const unsigned nw = std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, trials / 4096 + 1));
    if (nw == 1) return run_range(s, seed, 0, trials);
    std::vector<Tally> parts(nw);
    std::vector<std::thread> th;
    for (unsigned k = 0; k < nw; ++k) {
        const std::uint64_t lo = trials * k / nw, hi = trials * (k + 1) / nw;
        th.emplace_back([&, k, lo, hi] { parts[k] = run_range(s, seed, lo, hi); });
    }
    for (auto& t : th) t.join();
    Tally r;
    for (const auto& p : parts) {
        r.s2g += p.s2g;
        r.a2a_im += p.a2a_im;
        r.a2a_p += p.a2a_p;
        r.lin += p.lin;
        r.p_only += p.p_only;
    }
    return r;
}

}  // namespace

McCounts simulate_counts(const Scenario& s, std::uint64_t trials, std::uint64_t seed) {
    return simulate_counts(s, trials, seed, worker_count());
}

McCounts simulate_counts(const Scenario& s, std::uint64_t trials, std::uint64_t seed, unsigned workers) {
    const Tally t = run_parallel(s, trials, seed, std::max(1u, workers));
    return {trials, t.s2g, t.a2a_im, t.a2a_p, t.lin};
}

OutageEstimate make_estimate(std::uint64_t fails, std::uint64_t trials, std::uint64_t seed) {
    OutageEstimate e;
    e.trials = trials;
    e.seed = seed;
    e.method = "mc";
    e.value = trials ? double(fails) / double(trials) : 0.0;
    e.std_error = trials ? std::sqrt(e.value * (1.0 - e.value) / double(trials)) : 0.0;
    e.resolution_floor = e.value < 10.0 / double(std::max<std::uint64_t>(trials, 1));
    return e;
}

OutageEstimate simulate_op(const Scenario& s, Network net, IcMode mode, std::uint64_t trials,
                           std::uint64_t seed) {
    if (trials < 1) throw DomainError("simulate_op: trials must be >= 1");
    const McCounts c = simulate_counts(s, trials, seed);
    const std::uint64_t f =
        net == Network::s2g ? c.s2g : (mode == IcMode::imperfect ? c.a2a_im : c.a2a_p);
    return make_estimate(f, trials, seed);
}

PairedEstimate common_random_numbers_compare(const Scenario& s, std::uint64_t trials,
                                             std::uint64_t seed) {
    if (trials < 1) throw DomainError("common_random_numbers_compare: trials must be >= 1");
    const Tally t = run_parallel(s, trials, seed, worker_count());
    PairedEstimate r;
    r.im = make_estimate(t.a2a_im, trials, seed);
    r.p = make_estimate(t.a2a_p, trials, seed);
    r.diff = r.im.value - r.p.value;
    // paired differences d_i in {-1, 0, 1}
    const double n = double(trials);
    const double m2 = double(t.a2a_im - t.a2a_p + 2 * t.p_only) / n;  // E[d^2]
    r.diff_se = std::sqrt(std::max(0.0, m2 - r.diff * r.diff) / n);
    r.min_pointwise = t.p_only;
    return r;
}

}  // namespace sagin
