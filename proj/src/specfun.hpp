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
#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "errors.hpp"

namespace sagin::sf {

// log Gamma(z) for complex z, principal branch up to multiples of 2*pi*i
// (only exp() of it is ever used).
std::complex<double> lgamma(std::complex<double> z);

// Upper incomplete gamma Gamma(a, x) for any real a, x > 0 (x >= 0 when a > 0).
double upper_gamma(double a, double x);
// log|Gamma(a, x)|; Gamma(a, x) > 0 for every real a and x > 0.
double log_upper_gamma(double a, double x);
// Gamma(a, b) - Gamma(a, c), a > 0, b, c >= 0 (c may be +inf).
double delta_gamma(double a, double b, double c);

double bessel_j(int order, double x);
double bessel_i0(double x);  // power series, 1e-16 relative stop, 500 terms cap
double bessel_k(double order, double x);

double whittaker_w(double kappa, double mu, double x);

// Meijer G^{m,n}_{p,q}[x | a ; b] for real parameters and x > 0 by
// Mellin-Barnes integration along Re(s) = c. Requires a non-empty strip
// max(a_1..a_n) - 1 < c < min(b_1..b_m) and m + n > (p + q) / 2.
class MeijerG {
public:
    MeijerG(int m, int n, std::vector<double> a, std::vector<double> b);

    double operator()(double x) const;
    // Same contour and nodes for every x; c is picked for the geometric
    // middle of the batch.
    void eval(std::span<const double> xs, std::span<double> out) const;

    double strip_lo() const { return lo_; }
    double strip_hi() const { return hi_; }

private:
    std::complex<double> log_kernel(std::complex<double> s) const;
    double pick_c(double logx) const;

    int m_, n_;
    std::vector<double> a_, b_;
    double lo_, hi_, decay_;
};

// G^{0,1}_{1,0}[x | 1] and G^{2,0}_{0,2}[x | v/2, -v/2]: elementary reductions.
inline double meijer_g0110(double x);
double meijer_g2002(double v, double x);

struct CgqRule {
    explicit CgqRule(int n = 100);
    int n;
    std::vector<double> nodes, weights;  // weights already include pi/n

    template <class F>
    double integrate(F&& f, double a, double b) const;
};

template <class F>
double CgqRule::integrate(F&& f, double a, double b) const {
    const double b1 = 0.5 * (b - a), b2 = 0.5 * (b + a);
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
        const double v = f(b1 * nodes[i] + b2);
        if (!std::isfinite(v))
            throw NumericError("cgq: non-finite integrand at node");
        s += weights[i] * v;
    }
    return b1 * s;
}

inline double meijer_g0110(double x) { return std::exp(-1.0 / x); }

}  // namespace sagin::sf
