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

#include <cmath>

#include "errors.hpp"
#include "rng.hpp"

namespace sagin {

// Shadowed-Rician power |g_sr|^2 with parameters (m, b, Omega).
struct ShadowedRicianParams {
    double m = 2.0;
    double b = 0.063;
    double omega = 0.0005;

    double alpha() const;
    double beta() const { return 1.0 / (2.0 * b); }
    double delta() const;
    double beta_bar() const { return beta() - delta(); }
    // (-1)^k (1-m)_k delta^k / (k!)^2
    double zeta(int k) const;
    bool integer_m() const;
    void validate() const;
};

struct NakagamiParams {
    double m = 2.0;
    double nu = 2.0;
    void validate() const;
};

struct RicianParams {
    double K = 1.0;
    double nu = 2.0;
    void validate() const;
};

struct SatelliteLink {
    double P_s = 1.0;          // W
    double xi_db = 2.0;        // rain attenuation
    double lambda = 0.15;      // m
    double T_noise = 300.0;    // K
    double bandwidth = 15e6;   // Hz
    double gain_s_db = 53.45;  // satellite antenna
    double gain_sr_db = 4.8;   // relay antenna
    double theta_sr = 0.8 * 0.017453292519943295;
    double theta_3db = 0.3 * 0.017453292519943295;

    double free_space_scale() const;  // C
    double beam_gain() const;         // vartheta(theta_sr), linear
    double effective_gain() const;    // eta_s
    void validate() const;
};

constexpr double kBoltzmann = 1.380649e-23;

inline double db_to_lin(double db) { return std::pow(10.0, db / 10.0); }
inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double lin_to_db(double x) { return 10.0 * std::log10(x); }

double shadowed_rician_power_pdf(double x, const ShadowedRicianParams& p);
double shadowed_rician_power_cdf(double x, const ShadowedRicianParams& p);
double sample_shadowed_rician_power(Rng& rng, const ShadowedRicianParams& p);

double nakagami_power_pdf(double x, const NakagamiParams& p);
double nakagami_power_tail(double x, const NakagamiParams& p);  // Pr[Y > x]
double sample_nakagami_power(Rng& rng, const NakagamiParams& p);

double rician_power_pdf(double x, const RicianParams& p);
double rician_power_tail(double x, const RicianParams& p);  // Pr[Z > x]
double sample_rician_power(Rng& rng, const RicianParams& p);

// vartheta_sr (J1(r)/(2r) + 36 J3(r)/r^3), r = 2.07123 sin(theta)/sin(theta_3dB)
double beam_gain(double theta, double theta_3db, double gain_lin);

}  // namespace sagin
