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

#include "fixtures.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "specfun.hpp"

namespace sagin {

std::string default_fixture_path() {
    if (const char* p = std::getenv("SAGIN_FIXTURES")) return p;
    return std::string(SAGIN_FIXTURE_DIR) + "/specfun_oracle.txt";
}

std::vector<FixtureRow> load_fixtures(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file " + path);
    std::vector<FixtureRow> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        FixtureRow r;
        int np = 0;
        ss >> r.id >> r.family >> np;
        r.params.resize(np);
        for (auto& p : r.params) ss >> p;
        std::string xs, vs;
        ss >> xs >> vs;
        if (!ss) throw std::runtime_error("malformed fixture row: " + line);
        r.x = std::strtod(xs.c_str(), nullptr);
        r.expected = std::strtod(vs.c_str(), nullptr);
        rows.push_back(std::move(r));
    }
    return rows;
}

double eval_fixture(const FixtureRow& r) {
    const auto& p = r.params;
    if (r.family == "delta_gamma") return sf::delta_gamma(p[0], p[1], r.x);
    if (r.family == "upper_gamma") return sf::upper_gamma(p[0], r.x);
    if (r.family == "bessel_j") return sf::bessel_j(int(p[0]), r.x);
    if (r.family == "bessel_i0") return sf::bessel_i0(r.x);
    if (r.family == "bessel_k") return sf::bessel_k(p[0], r.x);
    if (r.family == "whittaker_w") return sf::whittaker_w(p[0], p[1], r.x);
    if (r.family == "meijer_g") {
        const int m = int(p[0]), n = int(p[1]), pp = int(p[2]), q = int(p[3]);
        std::vector<double> a(p.begin() + 4, p.begin() + 4 + pp);
        std::vector<double> b(p.begin() + 4 + pp, p.begin() + 4 + pp + q);
        if (m == 0 && n == 1 && pp == 1 && q == 0 && a[0] == 1.0) return sf::meijer_g0110(r.x);
        if (m == 2 && n == 0 && pp == 0 && q == 2 && b[0] == -b[1])
            return sf::meijer_g2002(2.0 * b[0], r.x);
        return sf::MeijerG(m, n, a, b)(r.x);
    }
    throw std::runtime_error("unknown fixture family " + r.family);
}

std::vector<FixtureResult> check_fixtures(const std::vector<FixtureRow>& rows) {
    std::vector<FixtureResult> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        FixtureResult fr;
        fr.row = r;
        fr.tol = r.family == "meijer_g" ? 1e-8 : 1e-10;
        try {
            fr.got = eval_fixture(r);
            fr.rel_err = r.expected == 0.0 ? std::abs(fr.got)
                                           : std::abs(fr.got - r.expected) / std::abs(r.expected);
            fr.ok = fr.rel_err <= fr.tol;
        } catch (const std::exception& e) {
            fr.error = e.what();
            fr.ok = false;
        }
        out.push_back(std::move(fr));
    }
    return out;
}

}  // namespace sagin
