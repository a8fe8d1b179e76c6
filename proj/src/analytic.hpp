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

#include <string>
#include <vector>

#include "swipt.hpp"

namespace sagin {

struct SeriesOptions {
    int cgq_n = 100;
    double rel_tol = 1e-12;  // stop after 3 consecutive terms below this
    int cap = 200;
};

struct OpDiagnostics {
    std::string route;          // which evaluation route produced the value
    double p_branch1 = 0.0;     // success mass, linear EH branch
    double p_branch2 = 0.0;     // success mass, saturated branch
    double clamp_excess = 0.0;  // how far outside [0,1] the raw value was
    bool truncated = false;     // a series hit its cap
    std::vector<std::string> notes;
};

struct OpResult {
    double value = 0.0;
    OpDiagnostics diag;
};

// Reference path: nested adaptive quadrature of the probability integrals.
OpResult op_s2g_integral(const Scenario& s);
OpResult op_a2a_integral(const Scenario& s, IcMode mode);

// Series path (finite/infinite sums + Meijer-G + CGQ over the satellite distance).
OpResult op_s2g_closed(const Scenario& s, const SeriesOptions& o = {});
OpResult op_a2a_closed(const Scenario& s, IcMode mode, const SeriesOptions& o = {});

// Pr[eta_s X w^-2 <= P_th]
double prob_linear_branch(const Scenario& s);

// (1-rho) T/2 [r_s (1 - OP_s2g) + r_a (1 - OP_a2a)]
double avg_throughput(double rho, double T_block, double r_s, double r_a, double op_s2g,
                      double op_a2a);

// Clamp to [0,1]; excess recorded in the diagnostics.
double clamp_probability(double v, OpDiagnostics& d);

}  // namespace sagin
