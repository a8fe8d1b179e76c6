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

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "analytic.hpp"
#include "specfun.hpp"

namespace sagin {

using boost::math::quadrature::gauss_kronrod;

double clamp_probability(double v, OpDiagnostics& d) {
    if (!std::isfinite(v)) throw NumericError("outage evaluation produced a non-finite value");
    const double c = std::clamp(v, 0.0, 1.0);
    d.clamp_excess = std::max(d.clamp_excess, std::abs(v - c));
    if (std::abs(v - c) > 1e-6) d.notes.push_back("clamped by " + std::to_string(std::abs(v - c)));
    return c;
}

double avg_throughput(double rho, double T_block, double r_s, double r_a, double op_s2g,
                      double op_a2a) {
    return (1.0 - rho) * T_block / 2.0 * (r_s * (1.0 - op_s2g) + r_a * (1.0 - op_a2a));
}

namespace {

// One relay-to-destination link in "success iff H r^-nu (a x w^-2 - b) > g" form.
struct Link {
    double a, b;      // A,B (S2G) or C|E,D (A2A)
    double g;         // gamma * sigma^2
    bool rician;      // destination fading: Rician (A2A) or Nakagami (S2G)
    double nu;
    std::vector<Monomial> pieces;
};

struct Ctx {
    const Scenario& s;
    Link L;
    double x_hi_scale;  // X beyond x_lo + this carries negligible mass
};

double fading_tail(const Ctx& c, double t) {
    if (!(t < std::numeric_limits<double>::infinity())) return 0.0;
    return c.L.rician ? rician_power_tail(t, c.s.rt) : nakagami_power_tail(t, c.s.rd);
}

double x_extent(const ShadowedRicianParams& p) {
    const double bb = p.integer_m() ? p.beta_bar() : p.beta() - p.delta();
    double x = 10.0 / bb;
    while (shadowed_rician_power_pdf(x, p) * (x + 1.0 / bb) > 1e-18) x *= 1.25;
    return x;
}

using Pair = std::array<double, 2>;

// Adaptive G7-K15 for a two-component integrand; error control on the sum.
template <class F>
Pair integrate2(F&& f, double a, double b, double tol, int depth = 0) {
    static constexpr double xk[8] = {0.991455371120812639, 0.949107912342758525, 0.864864423359769073,
                                     0.741531185599394440, 0.586087235467691130, 0.405845151377397167,
                                     0.207784955007898468, 0.0};
    static constexpr double wk[8] = {0.022935322010529225, 0.063092092629978553, 0.104790010322250184,
                                     0.140653259715525919, 0.169004726639267903, 0.190350578064785410,
                                     0.204432940075298892, 0.209482141084727828};
    static constexpr double wg[4] = {0.129484966168869693, 0.279705391489276668,
                                     0.381830050505118945, 0.417959183673469388};
    const double h = 0.5 * (b - a), m = 0.5 * (b + a);
    Pair K{0, 0}, G{0, 0};
    for (int i = 0; i < 8; ++i) {
        const int sgn_n = i == 7 ? 1 : 2;
        for (int sg = 0; sg < sgn_n; ++sg) {
            const double x = m + (sg ? -1.0 : 1.0) * h * xk[i];
            const Pair v = f(x);
            for (int j = 0; j < 2; ++j) {
                K[j] += wk[i] * v[j];
                if (i % 2 == 1) G[j] += wg[i / 2] * v[j];
            }
        }
    }
    for (int j = 0; j < 2; ++j) {
        K[j] *= h;
        G[j] *= h;
    }
    const double err = std::abs((K[0] + K[1]) - (G[0] + G[1]));
    if (err <= tol || depth >= 12) return K;
    const Pair l = integrate2(f, a, m, 0.5 * tol, depth + 1);
    const Pair r = integrate2(f, m, b, 0.5 * tol, depth + 1);
    return {l[0] + r[0], l[1] + r[1]};
}

// graded panels toward the left end, where the mass of X sits
template <class F>
double integrate_graded(F&& f, double a, double b, double tol) {
    static constexpr double cut[] = {0.0, 1.0 / 512, 1.0 / 64, 1.0 / 8, 1.0 / 2, 1.0};
    double s = 0.0;
    for (int i = 0; i + 1 < 6; ++i)
        s += integrate2([&](double x) { return Pair{f(x), 0.0}; }, a + (b - a) * cut[i],
                        a + (b - a) * cut[i + 1], tol / 5)[0];
    return s;
}

constexpr double kTol = 1e-13;  // absolute, per (w, r) pair

// success mass of both EH branches for one (w, r) pair
std::pair<double, double> inner(const Ctx& c, double w, double r) {
    const auto& s = c.s;
    const double P = s.swipt.P_th, eta = s.eta_s;
    const double w2 = w * w;
    const double gr = c.L.g * std::pow(r, c.L.nu);
    const double x0 = c.L.b * w2 / c.L.a;  // success needs x > x0
    const double xk = P * w2 / eta;        // saturation knee
    auto pdf = [&](double x) { return shadowed_rician_power_pdf(x, s.sr); };

    double p1 = 0.0, p2 = 0.0;
    if (xk > x0) {
        const double hi = std::min(xk, x0 + c.x_hi_scale);
        auto f = [&](double x) {
            const double den = c.L.a * x / w2 - c.L.b;
            if (den <= 0.0) return 0.0;
            return pdf(x) * fading_tail(c, gr / den);
        };
        p1 = integrate_graded(f, x0, hi, kTol);
    }
    const double lo = std::max(xk, x0);
    if (lo < c.x_hi_scale * 4.0) {
        auto f = [&](double x) {
            const double den = P * (c.L.a * x / w2 - c.L.b);
            if (den <= 0.0) return 0.0;
            return pdf(x) * fading_tail(c, gr * eta * x / w2 / den);
        };
        p2 = integrate_graded(f, lo, lo + c.x_hi_scale, kTol);
    }
    return {p1, p2};
}

OpResult success_integral(const Scenario& s, const Link& L, const char* route) {
    OpResult r;
    r.diag.route = route;
    Ctx c{s, L, x_extent(s.sr)};
    const double wmin = 1e3 * s.orbit.w_min, wmax = 1e3 * s.orbit.w_max();
    const double wer = 1e3 * s.orbit.w_er();

    auto fw = [&](double w) {
        Pair acc{0, 0};
        for (const auto& m : L.pieces) {
            auto fr = [&](double rr) {
                const auto pr = inner(c, w, rr);
                const double k = m.coef * std::pow(rr, m.exponent);
                return Pair{k * pr.first, k * pr.second};
            };
            const Pair q = integrate2(fr, m.lo, m.hi, 1e-9);
            acc[0] += q[0];
            acc[1] += q[1];
        }
        const double f = w / (wer * wmin);
        return Pair{f * acc[0], f * acc[1]};
    };
    const Pair p = integrate2(fw, wmin, wmax, 1e-9);
    r.diag.p_branch1 = p[0];
    r.diag.p_branch2 = p[1];
    r.value = clamp_probability(1.0 - p[0] - p[1], r.diag);
    return r;
}

}  // namespace

OpResult op_s2g_integral(const Scenario& s) {
    const Coefficients k = coefficients(s);
    OpResult r;
    if (s.gamma_s == 0.0) {
        r.diag.route = "integral:zero-threshold";
        return r;
    }
    if (!(k.A > 0.0)) {
        r.diag.route = "integral:ceiling";
        r.value = 1.0;
        return r;
    }
    Link L{k.A, k.B, s.gamma_s * s.noise.sd2, false, s.rd.nu, gu_pdf_pieces(s.cone)};
    return success_integral(s, L, "integral");
}

OpResult op_a2a_integral(const Scenario& s, IcMode mode) {
    const Coefficients k = coefficients(s);
    OpResult r;
    if (s.gamma_a == 0.0) {
        r.diag.route = "integral:zero-threshold";
        return r;
    }
    const double a = mode == IcMode::imperfect ? k.C : k.E;
    if (!(a > 0.0)) {
        r.diag.route = "integral:ceiling";
        r.value = 1.0;
        return r;
    }
    Link L{a, k.D, s.gamma_a * s.noise.st2, true, s.rt.nu, arx_pdf_pieces(s.cone)};
    return success_integral(s, L, "integral");
}

double prob_linear_branch(const Scenario& s) {
    const double wmin = 1e3 * s.orbit.w_min, wmax = 1e3 * s.orbit.w_max();
    const double wer = 1e3 * s.orbit.w_er();
    auto f = [&](double w) {
        return w / (wer * wmin) * shadowed_rician_power_cdf(s.swipt.P_th * w * w / s.eta_s, s.sr);
    };
    return gauss_kronrod<double, 31>::integrate(f, wmin, wmax, 10, 1e-12);
}

}  // namespace sagin
