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

#pragma once

#include <cstdint>
#include <string>

#include "swipt.hpp"

namespace sagin {

enum class Network { s2g, a2a };

struct OutageEstimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
    std::string method;
    std::uint64_t seed = 0;
    bool resolution_floor = false;  // value below ~10/trials
};

// Outage counts of all three links on one shared set of draws.
struct McCounts {
    std::uint64_t trials = 0;
    std::uint64_t s2g = 0, a2a_im = 0, a2a_p = 0;
    std::uint64_t linear_branch = 0;  // draws with eta_s X w^-2 <= P_th
};

struct PairedEstimate {
    OutageEstimate im, p;
    double diff = 0.0;     // OP_imIC - OP_pIC
    double diff_se = 0.0;
    std::uint64_t min_pointwise = 0;  // draws where p-IC fails but im-IC succeeds (must be 0)
};

// Worker count: SAGIN_THREADS if set, else hardware concurrency.
unsigned worker_count();

McCounts simulate_counts(const Scenario& s, std::uint64_t trials, std::uint64_t seed);
McCounts simulate_counts(const Scenario& s, std::uint64_t trials, std::uint64_t seed, unsigned workers);
OutageEstimate make_estimate(std::uint64_t fails, std::uint64_t trials, std::uint64_t seed);
OutageEstimate simulate_op(const Scenario& s, Network net, IcMode mode, std::uint64_t trials,
                           std::uint64_t seed);
PairedEstimate common_random_numbers_compare(const Scenario& s, std::uint64_t trials,
                                             std::uint64_t seed);

// One draw of every random quantity for trial `index`.
FadingDraw draw_trial(const Scenario& s, std::uint64_t seed, std::uint64_t index);

}  // namespace sagin
