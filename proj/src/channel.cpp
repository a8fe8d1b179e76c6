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

#include "channel.hpp"

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/hypergeometric_1F1.hpp>

#include "specfun.hpp"

namespace sagin {

double ShadowedRicianParams::alpha() const {
    return std::pow(2.0 * b * m / (2.0 * b * m + omega), m) / (2.0 * b);
}
double ShadowedRicianParams::delta() const { return omega / (2.0 * b * (2.0 * b * m + omega)); }

double ShadowedRicianParams::zeta(int k) const {
    // (1-m)_k by product; (-1)^k folded in
    double r = 1.0;
    const double d = delta();
    for (int j = 0; j < k; ++j) r *= -(1.0 - m + j) * d / double((j + 1) * (j + 1));
    return r;
}

bool ShadowedRicianParams::integer_m() const { return m == std::floor(m) && m >= 1.0; }

void ShadowedRicianParams::validate() const {
    if (!(m > 0.0)) throw DomainError("channel.sr.m must be > 0");
    if (!(b > 0.0)) throw DomainError("channel.sr.b must be > 0");
    if (!(omega >= 0.0)) throw DomainError("channel.sr.omega must be >= 0");
}

void NakagamiParams::validate() const {
    if (!(m >= 0.5)) throw DomainError("channel.rd.m must be >= 0.5");
    if (!(nu > 0.0)) throw DomainError("channel.rd.nu must be > 0");
}

void RicianParams::validate() const {
    if (!(K >= 0.0)) throw DomainError("channel.rt.K must be >= 0");
    if (!(nu > 0.0)) throw DomainError("channel.rt.nu must be > 0");
}

//------------------------------------------------------------------------------

double shadowed_rician_power_pdf(double x, const ShadowedRicianParams& p) {
    if (x < 0.0) return 0.0;
    if (p.integer_m()) {
        double s = 0.0, xk = 1.0;
        for (int k = 0; k < int(p.m); ++k, xk *= x) s += p.zeta(k) * xk;
        return p.alpha() * s * std::exp(-p.beta_bar() * x);
    }
    return p.alpha() * std::exp(-p.beta() * x) *
           boost::math::hypergeometric_1F1(p.m, 1.0, p.delta() * x);
}

double shadowed_rician_power_cdf(double x, const ShadowedRicianParams& p) {
    if (x <= 0.0) return 0.0;
    if (p.integer_m()) {
        // int_0^x t^k e^{-bb t} dt = k! bb^{-k-1} P(k+1, bb x)
        const double bb = p.beta_bar();
        double s = 0.0;
        for (int k = 0; k < int(p.m); ++k)
            s += p.zeta(k) * std::tgamma(k + 1.0) * std::pow(bb, -k - 1.0) *
                 boost::math::gamma_p(k + 1.0, bb * x);
        return p.alpha() * s;
    }
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        [&](double t) { return shadowed_rician_power_pdf(t, p); }, 0.0, x, 15, 1e-13);
}

double sample_shadowed_rician_power(Rng& rng, const ShadowedRicianParams& p) {
    const double a = p.omega > 0.0 ? std::sqrt(p.omega / p.m * rng.gamma(p.m)) : 0.0;
    const double s = std::sqrt(p.b);
    const double re = a + s * rng.normal(), im = s * rng.normal();
    return re * re + im * im;
}

double nakagami_power_pdf(double x, const NakagamiParams& p) {
    if (x < 0.0) return 0.0;
    if (x == 0.0) return p.m == 1.0 ? 1.0 : (p.m < 1.0 ? INFINITY : 0.0);
    return std::exp(p.m * std::log(p.m) + (p.m - 1.0) * std::log(x) - p.m * x - std::lgamma(p.m));
}

double nakagami_power_tail(double x, const NakagamiParams& p) {
    if (x <= 0.0) return 1.0;
    return boost::math::gamma_q(p.m, p.m * x);
}

double sample_nakagami_power(Rng& rng, const NakagamiParams& p) { return rng.gamma(p.m) / p.m; }

double rician_power_pdf(double x, const RicianParams& p) {
    if (x < 0.0) return 0.0;
    const double k1 = 1.0 + p.K;
    return k1 * std::exp(-p.K - k1 * x) * sf::bessel_i0(2.0 * std::sqrt(p.K * k1 * x));
}

double rician_power_tail(double x, const RicianParams& p) {
    if (x <= 0.0) return 1.0;
    // Poisson(K) mixture of gamma(m+1) tails; Q(m+1,y) = Q(m,y) + e^{-y} y^m / m!
    const double y = (1.0 + p.K) * x;
    if (y > 600.0) {
        double w = std::exp(-p.K), s = 0.0;
        for (int m = 0; m < 4000; ++m) {
            s += w * boost::math::gamma_q(m + 1.0, y);
            if (w < 1e-20 && m > p.K) break;
            w *= p.K / (m + 1.0);
        }
        return s;
    }
    double w = std::exp(-p.K), term = std::exp(-y), q = term, s = 0.0;
    for (int m = 0; m < 4000; ++m) {
        s += w * q;
        if (w < 1e-20 && m > p.K) break;
        w *= p.K / (m + 1.0);
        term *= y / (m + 1.0);
        q += term;
    }
    return std::min(1.0, s);
}

double sample_rician_power(Rng& rng, const RicianParams& p) {
    const double los = std::sqrt(p.K / (1.0 + p.K));
    const double s = std::sqrt(0.5 / (1.0 + p.K));
    const double re = los + s * rng.normal(), im = s * rng.normal();
    return re * re + im * im;
}

//------------------------------------------------------------------------------

double beam_gain(double theta, double theta_3db, double gain_lin) {
    if (!(theta_3db > 0.0)) throw DomainError("beam_gain: theta_3dB must be > 0");
    const double r = 2.07123 * std::sin(theta) / std::sin(theta_3db);
    if (std::abs(r) < 1e-6) return gain_lin;  // J1/(2r) -> 1/4, 36 J3/r^3 -> 3/4
    return gain_lin * (sf::bessel_j(1, r) / (2.0 * r) + 36.0 * sf::bessel_j(3, r) / (r * r * r));
}

double SatelliteLink::free_space_scale() const {
    const double xi = db_to_lin(xi_db);
    const double fp = 4.0 * M_PI;
    return xi * xi * lambda * lambda / (fp * fp * kBoltzmann * T_noise * bandwidth);
}

double SatelliteLink::beam_gain() const { return sagin::beam_gain(theta_sr, theta_3db, db_to_lin(gain_sr_db)); }

double SatelliteLink::effective_gain() const {
    return P_s * free_space_scale() * db_to_lin(gain_s_db) * beam_gain();
}

void SatelliteLink::validate() const {
    if (!(P_s > 0.0)) throw DomainError("link.P_s must be > 0");
    if (!(lambda > 0.0)) throw DomainError("link.lambda must be > 0");
    if (!(T_noise > 0.0)) throw DomainError("link.T must be > 0");
    if (!(bandwidth > 0.0)) throw DomainError("link.W must be > 0");
    if (!(theta_3db > 0.0)) throw DomainError("link.theta_3db must be > 0");
    if (!(effective_gain() > 0.0)) throw DomainError("link parameters give a non-positive eta_s");
}

}  // namespace sagin
