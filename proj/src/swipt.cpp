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

#include "swipt.hpp"

#include <cmath>

#include "specfun.hpp"

namespace sagin {

void SwiptParams::validate() const {
    if (!(chi > 0.0 && chi < 1.0)) throw DomainError("swipt.chi must lie in (0,1)");
    if (!(rho >= 0.0 && rho < 1.0)) throw DomainError("swipt.rho must lie in [0,1)");
    if (!(eps > 0.0 && eps < 1.0)) throw DomainError("swipt.eps must lie in (0,1)");
    if (!(mu > 0.0 && mu <= 1.0)) throw DomainError("swipt.mu must lie in (0,1]");
    if (!(P_th > 0.0)) throw DomainError("swipt.P_th must be > 0");
    if (!(T_block > 0.0)) throw DomainError("swipt.T must be > 0");
}

void NoiseParams::validate() const {
    if (!(sr2 > 0.0 && srb2 > 0.0 && sd2 > 0.0 && st2 > 0.0))
        throw DomainError("noise powers must be > 0");
}

void Scenario::validate() const {
    orbit.validate();
    cone.validate();
    sr.validate();
    rd.validate();
    rt.validate();
    swipt.validate();
    noise.validate();
    if (!(eta_s > 0.0 && std::isfinite(eta_s))) throw DomainError("eta_s must be finite and > 0");
    if (!(gamma_s >= 0.0)) throw DomainError("threshold gamma_s must be >= 0");
    if (!(gamma_a >= 0.0)) throw DomainError("threshold gamma_a must be >= 0");
}

Coefficients coefficients(const Scenario& s) {
    const auto& p = s.swipt;
    Coefficients c{};
    c.chi_re = p.chi_re();
    c.mu_eps = p.mu * (s.noise.sr2 + s.noise.srb2 / (1.0 - p.eps));
    c.mu_prime = p.mu < 1.0 ? p.mu_prime() : INFINITY;
    const double ce = c.chi_re * s.eta_s;
    c.A = ce * (p.mu - (1.0 - p.mu) * s.gamma_s);
    c.B = c.mu_eps * c.chi_re * s.gamma_s;
    c.C = ce * ((1.0 - p.mu) - p.mu * s.gamma_a);
    c.D = c.mu_eps * c.chi_re * s.gamma_a;
    c.E = ce * (1.0 - p.mu);
    c.P_AB = p.P_th * c.A / s.eta_s - c.B;
    c.P_CD = p.P_th * c.C / s.eta_s - c.D;
    c.P_ED = p.P_th * c.E / s.eta_s - c.D;
    return c;
}

double harvested_power(double X, double w_sr_km, double eta_s, const SwiptParams& p) {
    const double w = 1e3 * w_sr_km;
    const double a = eta_s * X / (w * w);
    return p.chi_re() * std::min(a, p.P_th);
}

double snr_gu(const FadingDraw& d, const Scenario& s) {
    const auto& p = s.swipt;
    const double w = 1e3 * d.w_sr;
    const double a = s.eta_s * d.X / (w * w);
    const double b = d.Y * std::pow(d.w_rd, -s.rd.nu);
    const double chi = p.chi_re();
    const double mu_eps = p.mu * (s.noise.sr2 + s.noise.srb2 / (1.0 - p.eps));
    if (a <= p.P_th)
        return p.mu * chi * a * b / (mu_eps * chi * b + (1.0 - p.mu) * chi * a * b + s.noise.sd2);
    const double P = p.P_th;
    return p.mu * chi * P * a * b /
           (mu_eps * chi * P * b + (1.0 - p.mu) * chi * a * P * b + a * s.noise.sd2);
}

double snr_arx(const FadingDraw& d, const Scenario& s, IcMode mode) {
    const auto& p = s.swipt;
    const double w = 1e3 * d.w_sr;
    const double a = s.eta_s * d.X / (w * w);
    const double z = d.Z * std::pow(d.w_rt, -s.rt.nu);
    const double chi = p.chi_re();
    const double mu_eps = p.mu * (s.noise.sr2 + s.noise.srb2 / (1.0 - p.eps));
    const double interf = mode == IcMode::imperfect ? p.mu * chi : 0.0;
    if (a <= p.P_th)
        return (1.0 - p.mu) * chi * a * z / (mu_eps * chi * z + interf * a * z + s.noise.st2);
    const double P = p.P_th;
    return (1.0 - p.mu) * chi * P * a * z /
           (mu_eps * chi * P * z + interf * P * a * z + a * s.noise.st2);
}

double gamma_from_rate(double r, double rho) {
    if (!(rho >= 0.0 && rho < 1.0)) throw DomainError("gamma_from_rate: rho must lie in [0,1)");
    if (!(r >= 0.0)) throw DomainError("gamma_from_rate: r must be >= 0");
    return std::exp2(2.0 * r / (1.0 - rho)) - 1.0;
}

}  // namespace sagin
