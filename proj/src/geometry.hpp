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

#include <vector>

#include "errors.hpp"
#include "rng.hpp"

namespace sagin {

// Satellite shell seen from the relay. Lengths in km.
struct OrbitGeometry {
    double w_e = 6371.0;
    double h_0 = 0.8;
    double w_min = 400.0;

    double w_er() const { return w_e + h_0; }
    double w_max() const;
    void validate() const;
};

// Relay at height h_0 above the GU disc of radius l; ARx uniform in the
// truncated cone [h_1, h_2] of half-angle phi. Lengths in m.
struct ConeGeometry {
    double h_0 = 800.0;
    double l = 250.0;
    double h_1 = 400.0;
    double h_2 = 500.0;
    double phi = 0.2617993877991494;  // pi/12

    void validate() const;

    double gu_min() const { return h_0; }
    double gu_max() const;
    double arx_min() const { return h_1; }
    double arx_max() const;
    // true when h_1/cos(phi) < h_2
    bool arx_case1() const;
};

double satellite_distance_pdf(double w, const OrbitGeometry& g);
double satellite_distance_cdf(double w, const OrbitGeometry& g);
double sample_satellite_distance(Rng& rng, const OrbitGeometry& g);

double gu_distance_pdf(double v, const ConeGeometry& g);
double gu_distance_cdf(double v, const ConeGeometry& g);
double sample_gu_distance(Rng& rng, const ConeGeometry& g);

double arx_distance_pdf(double u, const ConeGeometry& g);
double arx_distance_cdf(double u, const ConeGeometry& g);
double sample_arx_distance(Rng& rng, const ConeGeometry& g);

// A distance density written as a sum of monomials c * r^e on sub-intervals;
// lets the series code integrate term by term.
struct Monomial {
    double lo, hi, coef, exponent;
};
std::vector<Monomial> gu_pdf_pieces(const ConeGeometry& g);
std::vector<Monomial> arx_pdf_pieces(const ConeGeometry& g);

}  // namespace sagin
