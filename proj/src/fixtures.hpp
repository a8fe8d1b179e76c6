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

namespace sagin {

struct FixtureRow {
    std::string id, family;
    std::vector<double> params;
    double x = 0.0;
    double expected = 0.0;
};

struct FixtureResult {
    FixtureRow row;
    double got = 0.0;
    double rel_err = 0.0;
    double tol = 0.0;
    bool ok = false;
    std::string error;
};

std::vector<FixtureRow> load_fixtures(const std::string& path);
double eval_fixture(const FixtureRow& r);
std::vector<FixtureResult> check_fixtures(const std::vector<FixtureRow>& rows);
std::string default_fixture_path();

}  // namespace sagin
