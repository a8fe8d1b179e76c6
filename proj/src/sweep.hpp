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

#include <array>
#include <ostream>
#include <string>
#include <vector>

#include "config.hpp"

namespace sagin {

enum Link3 { kS2g = 0, kA2aIm = 1, kA2aP = 2 };
enum Method3 { kMc = 0, kClosed = 1, kIntegral = 2 };

struct PointResult {
    double x = 0.0;
    // op[link][method]; NaN where not requested or failed
    std::array<std::array<double, 3>, 3> op;
    std::array<double, 3> mc_se;
    std::array<double, 3> throughput;  // per method
    std::vector<std::string> flags;
    bool all_failed = false;  // some requested link failed under every method
};

struct SweepResult {
    std::string var;
    std::vector<PointResult> rows;
    bool any_all_failed() const;
};

PointResult evaluate_point(const ScenarioConfig& c, double x, unsigned mc_workers = 1);
// Points go to a pool of `workers` threads; rows come back in grid order.
SweepResult run_sweep(const ScenarioConfig& c, unsigned workers);

// Fixed schema; floats at 10 significant digits.
void write_csv(const SweepResult& r, std::ostream& out);
std::string csv_header(const std::string& var);

}  // namespace sagin
