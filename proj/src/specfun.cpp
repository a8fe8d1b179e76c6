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

#include "specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/gamma.hpp>

namespace sagin::sf {

using cplx = std::complex<double>;
using std::numbers::pi;

namespace {

// Lanczos, g = 7, n = 9
constexpr double kLg = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

cplx lgamma_right(cplx z) {
    z -= 1.0;
    cplx x = kLanczos[0];
    for (int i = 1; i < 9; ++i) x += kLanczos[i] / (z + double(i));
    const cplx t = z + kLg + 0.5;
    return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// log(sin(pi z)) without overflow for large |Im z|
cplx log_sin_pi(cplx z) {
    const double y = z.imag();
    if (std::abs(y) < 10.0) return std::log(std::sin(pi * z));
    const cplx I(0.0, 1.0);
    if (y > 0) {
        // sin = e^{-i pi z} (1 - e^{2 i pi z}) / (-2i)
        return -I * pi * z + std::log(1.0 - std::exp(2.0 * I * pi * z)) -
               std::log(-2.0 * I);
    }
    return I * pi * z + std::log(1.0 - std::exp(-2.0 * I * pi * z)) -
           std::log(2.0 * I);
}

}  // namespace

cplx lgamma(cplx z) {
    if (z.real() < 0.5)
        return std::log(pi) - log_sin_pi(z) - lgamma_right(1.0 - z);
    return lgamma_right(z);
}

//------------------------------------------------------------------------------
// incomplete gamma

namespace {

// Legendre continued fraction, modified Lentz. Returns log Gamma(a,x).
double log_upper_gamma_cf(double a, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 100000; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-16) break;
    }
    return -x + a * std::log(x) + std::log(h);
}

}  // namespace

double log_upper_gamma(double a, double x) {
    if (!std::isfinite(a) || std::isnan(x)) throw DomainError("upper_gamma: bad argument");
    if (x <= 0.0) {
        if (a > 0.0 && x == 0.0) return std::lgamma(a);
        throw DomainError("upper_gamma: x must be > 0 for a <= 0");
    }
    if (std::isinf(x)) return -std::numeric_limits<double>::infinity();
    if (a > 0.0) {
        if (x < a + 1.0) return std::lgamma(a) + std::log(boost::math::gamma_q(a, x));
        return log_upper_gamma_cf(a, x);
    }
    if (x >= 0.5) return log_upper_gamma_cf(a, x);

    // a <= 0, small x: downward recurrence
    //   Gamma(s, x) = (x^s e^{-x} - Gamma(s+1, x)) / (-s)
    const double fl = std::floor(a);
    double s, g;
    if (fl == a) {
        s = 0.0;
        g = boost::math::expint(1, x);
    } else {
        s = a - fl;  // in (0,1)
        g = boost::math::tgamma(s, x);
    }
    const double ex = std::exp(-x);
    while (s > a + 0.5) {
        s -= 1.0;
        g = (std::pow(x, s) * ex - g) / (-s);
    }
    return std::log(g);
}

double upper_gamma(double a, double x) { return std::exp(log_upper_gamma(a, x)); }

double delta_gamma(double a, double b, double c) {
    if (!(a > 0.0)) throw DomainError("delta_gamma: a must be > 0");
    if (b < 0.0 || c < 0.0 || std::isnan(b) || std::isnan(c))
        throw DomainError("delta_gamma: negative limit");
    if (b == c) return 0.0;
    if (b > c) return -delta_gamma(a, c, b);
    if (std::isinf(c)) return upper_gamma(a, b);

    const double lga = std::lgamma(a);
    if (b > 0.0) {
        const double lub = log_upper_gamma(a, b), luc = log_upper_gamma(a, c);
        if (luc - lub < -std::numbers::ln2)
            return -std::exp(lub) * std::expm1(luc - lub);
        const double llb = lga + std::log(boost::math::gamma_p(a, b));
        const double llc = lga + std::log(boost::math::gamma_p(a, c));
        if (llb - llc < -std::numbers::ln2)
            return -std::exp(llc) * std::expm1(llb - llc);
        // short interval carrying little mass on either side: integrate
        auto f = [a](double t) { return std::exp((a - 1.0) * std::log(t) - t); };
        return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, b, c, 10, 1e-15);
    }
    return std::exp(lga) * boost::math::gamma_p(a, c);
}

//------------------------------------------------------------------------------
// Bessel

double bessel_j(int order, double x) { return boost::math::cyl_bessel_j(order, x); }

double bessel_i0(double x) {
    const double q = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 500; ++k) {
        term *= q / (double(k) * k);
        sum += term;
        if (term < 1e-16 * sum) break;
    }
    return sum;
}

double bessel_k(double order, double x) {
    if (!(x > 0.0)) throw std::range_error("bessel_k: x must be > 0");
    return boost::math::cyl_bessel_k(order, x);
}

double meijer_g2002(double v, double x) { return 2.0 * bessel_k(v, 2.0 * std::sqrt(x)); }

//------------------------------------------------------------------------------
// Whittaker W

namespace {

// U(-N, b, x) = (-1)^N N! L_N^{(b-1)}(x)
double kummer_u_poly(int N, double b, double x) {
    const double al = b - 1.0;
    double l0 = 1.0, l1 = 1.0 + al - x;
    if (N == 0) return 1.0;
    for (int k = 1; k < N; ++k) {
        const double l2 = ((2.0 * k + 1.0 + al - x) * l1 - (k + al) * l0) / (k + 1.0);
        l0 = l1;
        l1 = l2;
    }
    double f = 1.0;
    for (int k = 2; k <= N; ++k) f *= k;
    return (N % 2 ? -1.0 : 1.0) * f * l1;
}

}  // namespace

double whittaker_w(double kappa, double mu, double x) {
    if (!(x > 0.0)) throw DomainError("whittaker_w: x must be > 0");
    mu = std::abs(mu);  // W is even in mu

    // W_{-mu-1/2, mu}(x) = e^{x/2} x^{mu+1/2} Gamma(-2mu, x), same with mu -> -mu
    for (double m : {mu, -mu}) {
        if (std::abs(kappa + m + 0.5) < 1e-15 * (1.0 + std::abs(kappa)))
            return std::exp(0.5 * x + (m + 0.5) * std::log(x) + log_upper_gamma(-2.0 * m, x));
    }

    const double a = mu - kappa + 0.5;
    const double lpre = -0.5 * x + (mu + 0.5) * std::log(x);
    if (a <= 0.0) {
        if (a == std::floor(a) && a > -200)
            return std::exp(lpre) * kummer_u_poly(int(-a), 1.0 + 2.0 * mu, x);
        throw DomainError("whittaker_w: parameters outside supported range");
    }
    // U(a, b, x) = 1/Gamma(a) int_0^inf e^{-xt} t^{a-1} (1+t)^{b-a-1} dt
    const double p = a - 1.0, q = mu + kappa - 0.5;
    auto f = [&](double t) {
        if (t <= 0.0) return 0.0;
        return std::exp(-x * t + p * std::log(t) + q * std::log1p(t));
    };
    const double split = std::min(1.0, 8.0 / x);
    boost::math::quadrature::tanh_sinh<double> ts;
    boost::math::quadrature::exp_sinh<double> es;
    const double i1 = ts.integrate(f, 0.0, split, 1e-15);
    const double i2 = es.integrate([&](double t) { return f(t); }, split,
                                   std::numeric_limits<double>::infinity(), 1e-15);
    return std::exp(lpre - std::lgamma(a)) * (i1 + i2);
}

//------------------------------------------------------------------------------
// Meijer G

namespace {

// 20-point Gauss-Legendre on [-1, 1]
struct GaussLegendre {
    static constexpr int N = 20;
    double x[N], w[N];
    GaussLegendre() {
        for (int i = 0; i < N; ++i) {
            double z = std::cos(pi * (i + 0.75) / (N + 0.5)), pp = 0.0;
            for (int it = 0; it < 100; ++it) {
                double p1 = 1.0, p2 = 0.0;
                for (int j = 1; j <= N; ++j) {
                    const double p3 = p2;
                    p2 = p1;
                    p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
                }
                pp = N * (z * p1 - p2) / (z * z - 1.0);
                const double dz = p1 / pp;
                z -= dz;
                if (std::abs(dz) < 1e-16) break;
            }
            x[i] = z;
            w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        }
    }
};

const GaussLegendre& gl20() {
    static const GaussLegendre g;
    return g;
}

}  // namespace

MeijerG::MeijerG(int m, int n, std::vector<double> a, std::vector<double> b)
    : m_(m), n_(n), a_(std::move(a)), b_(std::move(b)) {
    const int p = int(a_.size()), q = int(b_.size());
    if (m < 0 || n < 0 || m > q || n > p) throw DomainError("meijer_g: bad (m,n,p,q)");
    decay_ = m + n - 0.5 * (p + q);
    if (!(decay_ > 0.0)) throw DomainError("meijer_g: contour integral does not converge");
    lo_ = -std::numeric_limits<double>::infinity();
    hi_ = std::numeric_limits<double>::infinity();
    for (int j = 0; j < n; ++j) lo_ = std::max(lo_, a_[j] - 1.0);
    for (int j = 0; j < m; ++j) hi_ = std::min(hi_, b_[j]);
    if (!(lo_ < hi_)) throw DomainError("meijer_g: empty separating strip");
}

cplx MeijerG::log_kernel(cplx s) const {
    cplx r = 0.0;
    const int p = int(a_.size()), q = int(b_.size());
    for (int j = 0; j < m_; ++j) r += lgamma(b_[j] - s);
    for (int j = 0; j < n_; ++j) r += lgamma(1.0 - a_[j] + s);
    for (int j = m_; j < q; ++j) r -= lgamma(1.0 - b_[j] + s);
    for (int j = n_; j < p; ++j) r -= lgamma(a_[j] - s);
    return r;
}

double MeijerG::pick_c(double logx) const {
    double l = lo_, h = hi_;
    if (std::isinf(l)) l = h - 12.0;
    if (std::isinf(h)) h = l + 12.0;
    const double gap = h - l;
    l += 1e-3 * gap;
    h -= 1e-3 * gap;
    // rough size of |integrand| along the line; avoids zeros of 1/Gamma on the axis
    auto phi = [&](double c) {
        double mx = -1e300, acc = 0.0;
        double v[4];
        const double ts[4] = {0.0, 0.5, 1.0, 2.0};
        for (int i = 0; i < 4; ++i) {
            v[i] = log_kernel(cplx(c, ts[i])).real();
            mx = std::max(mx, v[i]);
        }
        for (double vi : v) acc += std::exp(vi - mx);
        return mx + std::log(acc) + c * logx;
    };
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = h - gr * (h - l), x2 = l + gr * (h - l);
    double f1 = phi(x1), f2 = phi(x2);
    for (int it = 0; it < 60 && h - l > 1e-4 * gap; ++it) {
        if (f1 < f2) {
            h = x2; x2 = x1; f2 = f1;
            x1 = h - gr * (h - l); f1 = phi(x1);
        } else {
            l = x1; x1 = x2; f1 = f2;
            x2 = l + gr * (h - l); f2 = phi(x2);
        }
    }
    return 0.5 * (l + h);
}

void MeijerG::eval(std::span<const double> xs, std::span<double> out) const {
    if (xs.empty()) return;
    double lmin = 1e300, lmax = -1e300;
    for (double x : xs) {
        if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("meijer_g: x must be > 0");
        lmin = std::min(lmin, std::log(x));
        lmax = std::max(lmax, std::log(x));
    }
    const double c = pick_c(0.5 * (lmin + lmax));
    const double wmax = std::max(std::abs(lmin), std::abs(lmax));
    double pscale = 0.0;
    for (double v : a_) pscale = std::max(pscale, std::abs(v));
    for (double v : b_) pscale = std::max(pscale, std::abs(v));
    const int pq = int(a_.size() + b_.size());

    // nodes/values on [0, T], panels shrinking with the local phase rate
    const auto& gl = gl20();
    std::vector<double> tk, wk;
    std::vector<cplx> lf;
    double peak = -1e300;
    double t0 = 0.0;
    const double lpeak_x = std::max(c * lmin, c * lmax);
    for (int panel = 0;; ++panel) {
        const double omega = wmax + pq * std::log(2.0 + t0 + pscale);
        const double h = std::min(1.0, 4.0 / omega);
        double pmax = -1e300;
        for (int i = 0; i < gl.N; ++i) {
            const double t = t0 + 0.5 * h * (gl.x[i] + 1.0);
            const cplx L = log_kernel(cplx(c, t));
            tk.push_back(t);
            wk.push_back(0.5 * h * gl.w[i]);
            lf.push_back(L);
            pmax = std::max(pmax, L.real());
        }
        peak = std::max(peak, pmax);
        t0 += h;
        if (pmax < peak - 42.0 && t0 > 2.0) break;
        if (t0 > 4000.0 || panel > 200000)
            throw NumericError("meijer_g: contour tail did not decay");
    }
    (void)lpeak_x;
    std::vector<cplx> fk(tk.size());
    for (size_t k = 0; k < tk.size(); ++k) fk[k] = std::exp(lf[k] - peak) * wk[k];

    for (size_t i = 0; i < xs.size(); ++i) {
        const double lx = std::log(xs[i]);
        double acc = 0.0, comp = 0.0;
        for (size_t k = 0; k < tk.size(); ++k) {
            const double ph = tk[k] * lx;
            const double term = fk[k].real() * std::cos(ph) - fk[k].imag() * std::sin(ph);
            // Kahan: cancellation between panels is the dominant error source
            const double y = term - comp;
            const double tt = acc + y;
            comp = (tt - acc) - y;
            acc = tt;
        }
        out[i] = std::exp(peak + c * lx) * acc / pi;
    }
}

double MeijerG::operator()(double x) const {
    double r;
    eval(std::span<const double>(&x, 1), std::span<double>(&r, 1));
    return r;
}

//------------------------------------------------------------------------------

CgqRule::CgqRule(int n_) : n(n_) {
    if (n < 1) throw DomainError("cgq: n must be >= 1");
    nodes.resize(n);
    weights.resize(n);
    for (int i = 1; i <= n; ++i) {
        const double v = std::cos((2.0 * i - 1.0) * pi / (2.0 * n));
        nodes[i - 1] = v;
        weights[i - 1] = (pi / n) * std::sqrt(1.0 - v * v);
    }
}

}  // namespace sagin::sf
