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
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "analytic.hpp"

namespace sagin {

// Bad key, bad value or inconsistent combination. key() names the offending
// config key ("" when the problem is not tied to one).
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& msg)
        : std::runtime_error(key.empty() ? msg : "config key '" + key + "': " + msg), key_(std::move(key)) {}
    const std::string& key() const { return key_; }

private:
    std::string key_;
};

struct MethodSet {
    bool mc = true, closed = true, integral = true;
};

struct ScenarioConfig {
    // Keys explicitly set (preset first, then file), as written.
    std::map<std::string, std::string> raw;
    std::vector<std::string> warnings;
    std::string preset;

    Scenario base;  // resolved at the base point (no sweep override)
    std::string sweep_var;
    std::vector<double> sweep_values;
    MethodSet methods;
    bool s2g = true, a2a = true;
    IcMode throughput_mode = IcMode::imperfect;
    double r_s = 0.1, r_a = 0.1;
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 1;
    SeriesOptions series;
};

// Parse "key = value" lines ('#' starts a comment). preset may be "".
ScenarioConfig parse_config(const std::string& text, const std::string& preset = "");
ScenarioConfig load_config(const std::string& path, const std::string& preset = "");

// Re-resolve with the sweep variable set to x. Throws ConfigError if x is
// out of range for that key.
Scenario scenario_at(const ScenarioConfig& c, double x);

// Set or replace one key and re-resolve everything.
void set_config_value(ScenarioConfig& c, const std::string& key, const std::string& value);

struct KeyInfo {
    std::string name, default_value, help;
};
const std::vector<KeyInfo>& config_keys();
std::vector<std::string> figure_presets();

}  // namespace sagin
