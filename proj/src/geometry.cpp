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

#include "geometry.hpp"

#include <cmath>
#include <stdexcept>

#include "specfun.hpp"

namespace sagin {

double OrbitGeometry::w_max() const { return std::sqrt(w_min * w_min + 2.0 * w_er() * w_min); }

void OrbitGeometry::validate() const {
    if (!(w_e > 0.0)) throw DomainError("orbit.w_e must be > 0");
    if (!(h_0 >= 0.0)) throw DomainError("orbit.h_0 must be >= 0");
    if (!(w_min > 0.0)) throw DomainError("orbit.w_min must be > 0");
}

double ConeGeometry::gu_max() const { return std::sqrt(h_0 * h_0 + l * l); }
double ConeGeometry::arx_max() const { return h_2 / std::cos(phi); }
bool ConeGeometry::arx_case1() const { return h_1 / std::cos(phi) < h_2; }

void ConeGeometry::validate() const {
    if (!(h_0 > 0.0)) throw DomainError("geometry.h_0 must be > 0");
    if (!(l > 0.0)) throw DomainError("geometry.l must be > 0");
    if (!(h_1 > 0.0 && h_1 < h_2)) throw DomainError("geometry.h_1/h_2 must satisfy 0 < h_1 < h_2");
    if (!(phi > 0.0 && phi < M_PI / 2)) throw DomainError("geometry.phi must lie in (0, pi/2)");
}

//------------------------------------------------------------------------------

double satellite_distance_pdf(double w, const OrbitGeometry& g) {
    if (!std::isfinite(w)) throw DomainError("satellite_distance_pdf: non-finite distance");
    if (w < g.w_min || w > g.w_max()) return 0.0;
    return w / (g.w_er() * g.w_min);
}

double satellite_distance_cdf(double w, const OrbitGeometry& g) {
    if (w <= g.w_min) return 0.0;
    if (w >= g.w_max()) return 1.0;
    return (w * w - g.w_min * g.w_min) / (2.0 * g.w_er() * g.w_min);
}

double sample_satellite_distance(Rng& rng, const OrbitGeometry& g) {
    return std::sqrt(g.w_min * g.w_min + 2.0 * g.w_er() * g.w_min * rng.uniform());
}

double gu_distance_pdf(double v, const ConeGeometry& g) {
    if (v < g.h_0 || v > g.gu_max()) return 0.0;
    return 2.0 * v / (g.l * g.l);
}

double gu_distance_cdf(double v, const ConeGeometry& g) {
    if (v <= g.h_0) return 0.0;
    if (v >= g.gu_max()) return 1.0;
    return (v * v - g.h_0 * g.h_0) / (g.l * g.l);
}

double sample_gu_distance(Rng& rng, const ConeGeometry& g) {
    return std::sqrt(g.h_0 * g.h_0 + g.l * g.l * rng.uniform());
}

// For a point at range u the admissible polar angles satisfy
// max(cos phi, h_1/u) <= cos(theta) <= min(1, h_2/u); the shell area over the
// cone volume (pi/3) tan^2(phi) (h_2^3 - h_1^3) gives the density. Both
// branch tables fall out of which bound is active.
std::vector<Monomial> arx_pdf_pieces(const ConeGeometry& g) {
    const double c = std::cos(g.phi), t = std::tan(g.phi);
    const double k = 6.0 / ((g.h_2 * g.h_2 * g.h_2 - g.h_1 * g.h_1 * g.h_1) * t * t);
    const double a = g.h_1 / c, b = g.h_2 / c;
    std::vector<Monomial> p;
    if (g.arx_case1()) {
        p.push_back({g.h_1, a, k, 2.0});
        p.push_back({g.h_1, a, -k * g.h_1, 1.0});
        p.push_back({a, g.h_2, k * (1.0 - c), 2.0});
    } else {
        p.push_back({g.h_1, g.h_2, k, 2.0});
        p.push_back({g.h_1, g.h_2, -k * g.h_1, 1.0});
        p.push_back({g.h_2, a, k * (g.h_2 - g.h_1), 1.0});
    }
    const double lo = g.arx_case1() ? g.h_2 : a;
    p.push_back({lo, b, k * g.h_2, 1.0});
    p.push_back({lo, b, -k * c, 2.0});
    return p;
}

std::vector<Monomial> gu_pdf_pieces(const ConeGeometry& g) {
    return {{g.h_0, g.gu_max(), 2.0 / (g.l * g.l), 1.0}};
}

double arx_distance_pdf(double u, const ConeGeometry& g) {
    double s = 0.0;
    // left-closed / right-open pieces; the density is continuous anyway
    for (const auto& m : arx_pdf_pieces(g))
        if (u >= m.lo && u < m.hi) s += m.coef * std::pow(u, m.exponent);
    return s;
}

double arx_distance_cdf(double u, const ConeGeometry& g) {
    if (u <= g.h_1) return 0.0;
    if (u >= g.arx_max()) return 1.0;
    double s = 0.0;
    for (const auto& m : arx_pdf_pieces(g)) {
        if (u <= m.lo) continue;
        const double hi = std::min(u, m.hi), e1 = m.exponent + 1.0;
        s += m.coef * (std::pow(hi, e1) - std::pow(m.lo, e1)) / e1;
    }
    return s;
}

double sample_arx_distance(Rng& rng, const ConeGeometry& g) {
    const double h13 = g.h_1 * g.h_1 * g.h_1, h23 = g.h_2 * g.h_2 * g.h_2;
    const double z = std::cbrt(h13 + (h23 - h13) * rng.uniform());
    const double r = z * std::tan(g.phi) * std::sqrt(rng.uniform());
    return std::sqrt(z * z + r * r);
}

}  // namespace sagin
