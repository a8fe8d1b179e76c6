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

#include "channel.hpp"
#include "geometry.hpp"

namespace sagin {

struct SwiptParams {
    double chi = 0.6;
    double rho = 0.4;
    double eps = 0.4;
    double mu = 0.7;
    double P_th = 0.01;  // W
    double T_block = 1.0;

    double chi_re() const { return chi * (2.0 * rho / (1.0 - rho) + eps); }
    double mu_prime() const { return mu / (1.0 - mu); }  // +inf at mu = 1
    void validate() const;
};

struct NoiseParams {
    double sr2 = 1e-8;   // sigma_r^2
    double srb2 = 1e-8;  // sigma_rb^2
    double sd2 = 1e-8;   // sigma_d^2
    double st2 = 1e-8;   // sigma_t^2
    void validate() const;
};

enum class IcMode { imperfect, perfect };

// Everything the outage evaluators need for one network instance.
struct Scenario {
    OrbitGeometry orbit;
    ConeGeometry cone;
    ShadowedRicianParams sr;
    NakagamiParams rd;
    RicianParams rt;
    SwiptParams swipt;
    NoiseParams noise;
    double eta_s = 1e11;   // linear, distances in metres
    double gamma_s = 0.0;  // linear SNR thresholds
    double gamma_a = 0.0;

    void validate() const;
};

// Composite constants of the success events.
//   S2G branch 1 succeeds iff  Y v^-nu (A X w^-2 - B) > gamma_S sigma_d^2
//   A2A branch 1 succeeds iff  Z u^-nu (C X w^-2 - D) > gamma_A sigma_t^2  (E for p-IC)
struct Coefficients {
    double chi_re, mu_eps, mu_prime;
    double A, B, C, D, E;
    double P_AB, P_CD, P_ED;
};

Coefficients coefficients(const Scenario& s);

struct FadingDraw {
    double X, Y, Z;
    double w_sr;  // km
    double w_rd, w_rt;  // m
};

double harvested_power(double X, double w_sr_km, double eta_s, const SwiptParams& p);
double snr_gu(const FadingDraw& d, const Scenario& s);
double snr_arx(const FadingDraw& d, const Scenario& s, IcMode mode);
double gamma_from_rate(double r, double rho);

}  // namespace sagin
