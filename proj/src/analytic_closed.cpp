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

// Series evaluation of the success probabilities.
//
// With z = a X w^-2 - b the linear-branch success mass is
//   E_{w,r} sum_k alpha zeta_k (w^2/a)^{k+1} e^{-s b} sum_n c_n (kappa r^nu)^n / n!
//           sum_{k1} C(k,k1) b^{k-k1} int_0^Pab z^{k1-n} e^{-s z - kappa r^nu / z} dz,
// s = beta_bar w^2 / a, where the destination tail is written as
//   Pr[H > t] = sum_n c_n (theta t)^n e^{-theta t} / n!
// (Nakagami: c_n = 1 for n < m; Rician: c_n = Pr[Poisson(K) >= n]).
// The r-integrals over each monomial of the distance pdf reduce to
// Meijer-G antiderivatives
//   int_0^y r^{al-1} G^{m,n}_{p,q}[k r^nu | a; b] dr
//     = y^al / nu G^{m,n+1}_{p+1,q+1}[k y^nu | 1 - al/nu, a; b, -al/nu],
// pure powers, or incomplete-gamma differences; the satellite distance is
// left to Chebyshev-Gauss quadrature.
//
// Two equivalent routes exist for the z-integral on (0, Pab):
//   "series"     e^{-sz} expanded: G^{2,1}_{2,3} terms, cancellation ~ e^{2 s Pab}
//   "complement" (0, inf) in closed form (K_v -> G^{2,1}_{1,3}) minus the
//                (Pab, inf) tail with e^{-c/z} expanded: cancellation ~ e^{2c/Pab}
// and the cheaper-to-trust one is chosen per call.

#include <cmath>
#include <map>
#include <tuple>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/binomial.hpp>

#include "analytic.hpp"
#include "specfun.hpp"

namespace sagin {

namespace {

using boost::math::quadrature::gauss_kronrod;

double binom(int n, int k) { return boost::math::binomial_coefficient<double>(unsigned(n), unsigned(k)); }

struct EndPoint {
    double r, wt;  // signed weight of the antiderivative at r
};

struct Link {
    double a, b, g;  // success iff H r^-nu (a X w^-2 - b) > g
    double theta;    // tail rate of H
    std::vector<double> cn;
    double nu;
    std::vector<Monomial> pieces;
};

// Running sum with the stopping rule: 3 consecutive terms below tol * |sum|.
struct SeriesSum {
    double sum = 0.0;
    int small = 0;
    bool add(double t, double tol) {
        sum += t;
        if (std::abs(t) <= tol * std::abs(sum)) ++small;
        else small = 0;
        return small >= 3;
    }
};

class Evaluator {
public:
    Evaluator(const Scenario& s, const Link& L, const SeriesOptions& o, OpDiagnostics& d)
        : s_(s), L_(L), o_(o), d_(d), rule_(o.cgq_n) {
        M_ = int(s.sr.m);
        alpha_ = s.sr.alpha();
        bb_ = s.sr.beta_bar();
        for (int k = 0; k < M_; ++k) zeta_.push_back(s.sr.zeta(k));
        P_ = s.swipt.P_th;
        eta_ = s.eta_s;
        Pab_ = std::isinf(P_) ? INFINITY : P_ * L.a / eta_ - L.b;
        kappa_ = L.theta * L.g;
        kappa2_ = std::isinf(P_) ? 0.0 : L.theta * L.g * eta_ / (P_ * L.a);

        const double wmin = 1e3 * s.orbit.w_min, wmax = 1e3 * s.orbit.w_max();
        const double wer = 1e3 * s.orbit.w_er();
        const double b1 = 0.5 * (wmax - wmin), b2 = 0.5 * (wmax + wmin);
        for (int i = 0; i < rule_.n; ++i) {
            const double w = b1 * rule_.nodes[i] + b2;
            w_.push_back(w);
            om_.push_back(b1 * rule_.weights[i] * w / (wer * wmin));
            s_i_.push_back(bb_ * w * w / L.a);
        }
        // per-node common factor alpha zeta_k (w^2/a)^{k+1} e^{-s b}, k-resolved
        pre_.assign(w_.size() * M_, 0.0);
        for (size_t i = 0; i < w_.size(); ++i) {
            const double q = w_[i] * w_[i] / L.a;
            double qk = q;
            for (int k = 0; k < M_; ++k, qk *= q)
                pre_[i * M_ + k] = alpha_ * zeta_[k] * qk * std::exp(-s_i_[i] * L.b);
        }
        // antiderivative endpoints grouped by monomial exponent
        for (const auto& m : L.pieces) {
            auto& v = ends_[m.exponent];
            v.push_back({m.hi, m.coef});
            v.push_back({m.lo, -m.coef});
        }
        r_max_ = 0.0;
        for (const auto& m : L.pieces) r_max_ = std::max(r_max_, m.hi);
    }

    double branch1() {
        if (!(Pab_ > 0.0)) return 0.0;
        const double smax = s_i_.back() > s_i_.front() ? s_i_.back() : s_i_.front();
        const double x_series = std::isinf(Pab_) ? INFINITY : smax * Pab_;
        const double x_comp = kappa_ * std::pow(r_max_, L_.nu) / Pab_;
        if (x_series <= 8.0 && x_series <= x_comp) {
            d_.route += "series";
            return branch1_series();
        }
        if (x_comp <= 18.0) {
            d_.route += "complement";
            return branch1_linear() - branch1_tail();
        }
        d_.route += "cgq2d";
        d_.notes.push_back("branch 1: both series routes ill-conditioned; 2-D quadrature used");
        return branch1_quadrature();
    }

    double branch2() {
        if (std::isinf(P_)) return 0.0;
        if (Pab_ > 0.0) {
            d_.route += "+whittaker";
            return branch2_whittaker();
        }
        if (2.0 * kappa2_ * std::pow(r_max_, L_.nu) <= 20.0) {
            d_.route += "+bessel";
            return branch2_bessel();
        }
        d_.route += "+cgq2d";
        d_.notes.push_back("branch 2: exp(-c) expansion ill-conditioned; 2-D quadrature used");
        return branch2_quadrature();
    }

private:
    // Sum over the CGQ nodes, sr index k and binomial index k1 of
    //   pre(i,k) C(kk,k1) b^{kk-k1} * f(i)
    // where kk = k + shift (shift = n on the saturated branch).
    template <class F>
    double node_sum(int k1, int shift, F&& f) const {
        double acc = 0.0;
        for (size_t i = 0; i < w_.size(); ++i) {
            double ck = 0.0;
            for (int k = std::max(0, k1 - shift); k < M_; ++k)
                ck += pre_[i * M_ + k] * binom(k + shift, k1) * std::pow(L_.b, k + shift - k1);
            if (ck != 0.0) acc += om_[i] * ck * f(i);
        }
        return acc;
    }

    int n_terms() const { return int(L_.cn.size()); }

    // sum over endpoints of wt * r^al / nu * G(arg(r))
    double g_endpoints(const sf::MeijerG& G, double e, double al, const std::vector<double>& args,
                       const std::vector<EndPoint>& ends) const {
        std::vector<double> out(args.size());
        G.eval(args, out);
        double acc = 0.0;
        for (size_t j = 0; j < ends.size(); ++j)
            acc += ends[j].wt * std::exp(al * std::log(ends[j].r)) / L_.nu * out[j];
        (void)e;
        return acc;
    }

    // ---- branch 1, e^{-sz} expanded
    double branch1_series() {
        const double nu = L_.nu;
        std::map<std::tuple<int, int, double>, double> gcache;  // (n, sig, e) -> radial value
        auto radial = [&](int n, int sig, double e) {
            auto key = std::make_tuple(n, sig, e);
            auto it = gcache.find(key);
            if (it != gcache.end()) return it->second;
            const double al = e + 1.0 + nu * n;
            sf::MeijerG G(2, 1, {1.0 - al / nu, sig + 1.0}, {double(sig), 0.0, -al / nu});
            const auto& ends = ends_.at(e);
            std::vector<double> args;
            for (const auto& p : ends) args.push_back(kappa_ * std::pow(p.r, nu) / Pab_);
            const double v = g_endpoints(G, e, al, args, ends);
            gcache[key] = v;
            return v;
        };
        SeriesSum total;
        bool done = false;
        for (int k2 = 0; k2 <= o_.cap && !done; ++k2) {
            double term = 0.0;
            for (int n = 0; n < n_terms(); ++n) {
                const double cn = L_.cn[n] * std::pow(kappa_, n) / std::tgamma(n + 1.0);
                for (int k1 = 0; k1 < M_; ++k1) {
                    const int sig = k1 - n + k2 + 1;
                    double rad = 0.0;
                    for (const auto& [e, _] : ends_) rad += radial(n, sig, e);
                    // (-s)^k2 / k2! * Pab^sig
                    const double lf = sig * std::log(Pab_) - std::lgamma(k2 + 1.0);
                    term += cn * rad * node_sum(k1, 0, [&](size_t i) {
                                return (k2 % 2 ? -1.0 : 1.0) * std::exp(lf + k2 * std::log(s_i_[i]));
                            });
                }
            }
            done = total.add(term, o_.rel_tol);
            if (k2 == o_.cap) d_.truncated = true;
        }
        return total.sum;
    }

    // ---- branch 1, z over (0, inf): K-Bessel closed form, r-integral -> G^{2,1}_{1,3}
    double branch1_linear() {
        const double nu = L_.nu;
        double total = 0.0;
        std::vector<double> args;
        for (int n = 0; n < n_terms(); ++n) {
            const double cn = L_.cn[n] / std::tgamma(n + 1.0);
            for (int k1 = 0; k1 < M_; ++k1) {
                const int q = k1 - n + 1;
                // radial part per node
                std::vector<double> rad(w_.size(), 0.0);
                for (const auto& [e, ends] : ends_) {
                    const double al = e + 1.0 + nu * n + nu * q / 2.0;
                    sf::MeijerG G(2, 1, {1.0 - al / nu}, {q / 2.0, -q / 2.0, -al / nu});
                    args.clear();
                    for (size_t i = 0; i < w_.size(); ++i)
                        for (const auto& p : ends) args.push_back(kappa_ * s_i_[i] * std::pow(p.r, nu));
                    std::vector<double> out(args.size());
                    G.eval(args, out);
                    for (size_t i = 0; i < w_.size(); ++i)
                        for (size_t j = 0; j < ends.size(); ++j)
                            rad[i] += ends[j].wt * std::exp(al * std::log(ends[j].r)) / nu *
                                      out[i * ends.size() + j];
                }
                const double lk = (n + q / 2.0) * std::log(kappa_);
                total += cn * node_sum(k1, 0, [&](size_t i) {
                    return std::exp(lk - q / 2.0 * std::log(s_i_[i])) * rad[i];
                });
            }
        }
        return total;
    }

    // ---- branch 1, the (Pab, inf) part removed from branch1_linear
    double branch1_tail() {
        if (std::isinf(Pab_)) return 0.0;
        const double nu = L_.nu;
        SeriesSum total;
        bool done = false;
        for (int k2 = 0; k2 <= o_.cap && !done; ++k2) {
            double term = 0.0;
            for (int n = 0; n < n_terms(); ++n) {
                const int j = n + k2;
                double rad = 0.0;  // int pdf(r) r^{nu j} dr
                for (const auto& [e, ends] : ends_)
                    for (const auto& p : ends) rad += p.wt * std::pow(p.r, e + 1.0 + nu * j) / (e + 1.0 + nu * j);
                const double cf = L_.cn[n] / std::tgamma(n + 1.0) * (k2 % 2 ? -1.0 : 1.0) /
                                  std::tgamma(k2 + 1.0) * std::pow(kappa_, j) * rad;
                for (int k1 = 0; k1 < M_; ++k1) {
                    const double ap = k1 - n - k2 + 1.0;
                    term += cf * node_sum(k1, 0, [&](size_t i) {
                        const double x = s_i_[i] * Pab_;
                        return std::exp(-ap * std::log(s_i_[i]) + sf::log_upper_gamma(ap, x));
                    });
                }
            }
            done = total.add(term, o_.rel_tol);
            if (k2 == o_.cap) d_.truncated = true;
        }
        return total.sum;
    }

    // ---- saturated branch, Pab > 0: incomplete gamma written as Whittaker W
    //   s^{-a} Gamma(a, s P) = s^{-a} e^{-sP/2} (sP)^{(a-1)/2} W_{(a-1)/2, a/2}(sP)
    double branch2_whittaker() {
        const double nu = L_.nu;
        SeriesSum total;
        bool done = false;
        for (int k2 = 0; k2 <= o_.cap && !done; ++k2) {
            double term = 0.0;
            for (int n = 0; n < n_terms(); ++n) {
                double rad = 0.0;  // int pdf(r) (k' r^nu)^{n+k2} e^{-k' r^nu} dr
                for (const auto& m : L_.pieces) {
                    const double sh = n + k2 + (m.exponent + 1.0) / nu;
                    rad += m.coef / nu * std::pow(kappa2_, -(m.exponent + 1.0) / nu) *
                           sf::delta_gamma(sh, kappa2_ * std::pow(m.lo, nu), kappa2_ * std::pow(m.hi, nu));
                }
                const double cf = L_.cn[n] / std::tgamma(n + 1.0) * (k2 % 2 ? -1.0 : 1.0) *
                                  std::pow(L_.b, k2) / std::tgamma(k2 + 1.0) * rad;
                if (cf == 0.0) continue;
                for (int k1 = 0; k1 < M_ + n; ++k1) {
                    const double ap = k1 - n - k2 + 1.0;
                    term += cf * node_sum(k1, n, [&](size_t i) {
                        const double x = s_i_[i] * Pab_;
                        return std::exp(-ap * std::log(s_i_[i]) - 0.5 * x + 0.5 * (ap - 1.0) * std::log(x)) *
                               sf::whittaker_w(0.5 * (ap - 1.0), 0.5 * ap, x);
                    });
                }
            }
            done = total.add(term, o_.rel_tol);
            if (k2 == o_.cap) d_.truncated = true;
        }
        return total.sum;
    }

    // ---- saturated branch, Pab <= 0: z over (0, inf) -> K-Bessel, e^{-k' r^nu} expanded
    double branch2_bessel() {
        const double nu = L_.nu, b = L_.b;
        SeriesSum total;
        bool done = false;
        std::vector<double> args;
        for (int k2 = 0; k2 <= o_.cap && !done; ++k2) {
            double term = 0.0;
            for (int n = 0; n < n_terms(); ++n) {
                const double cf0 = L_.cn[n] / std::tgamma(n + 1.0) * (k2 % 2 ? -1.0 : 1.0) / std::tgamma(k2 + 1.0);
                for (int k1 = 0; k1 < M_ + n; ++k1) {
                    const int q = k1 - n + 1;
                    std::vector<double> rad(w_.size(), 0.0);
                    for (const auto& [e, ends] : ends_) {
                        const double al = e + 1.0 + nu * (n + k2 + q / 2.0);
                        sf::MeijerG G(2, 1, {1.0 - al / nu}, {q / 2.0, -q / 2.0, -al / nu});
                        args.clear();
                        for (size_t i = 0; i < w_.size(); ++i)
                            for (const auto& p : ends) args.push_back(kappa2_ * b * s_i_[i] * std::pow(p.r, nu));
                        std::vector<double> out(args.size());
                        G.eval(args, out);
                        for (size_t i = 0; i < w_.size(); ++i)
                            for (size_t j = 0; j < ends.size(); ++j)
                                rad[i] += ends[j].wt * std::exp(al * std::log(ends[j].r)) / nu *
                                          out[i * ends.size() + j];
                    }
                    const double lk = (n + k2 + q / 2.0) * std::log(kappa2_) + q / 2.0 * std::log(b);
                    term += cf0 * node_sum(k1, n, [&](size_t i) {
                        return std::exp(lk - q / 2.0 * std::log(s_i_[i])) * rad[i];
                    });
                }
            }
            done = total.add(term, o_.rel_tol);
            if (k2 == o_.cap) d_.truncated = true;
        }
        return total.sum;
    }

    // ---- fallbacks: CGQ over w, adaptive Gauss-Kronrod over r and z
    template <class Inner>
    double quad2d(Inner&& inner) const {
        double acc = 0.0;
        for (size_t i = 0; i < w_.size(); ++i) {
            double ri = 0.0;
            for (const auto& m : L_.pieces)
                ri += gauss_kronrod<double, 31>::integrate(
                    [&](double r) { return m.coef * std::pow(r, m.exponent) * inner(i, r); }, m.lo, m.hi, 8, 1e-10);
            acc += om_[i] * ri;
        }
        return acc;
    }

    double tail_mix(double t) const {
        // sum_n c_n t^n e^{-t} / n!
        double term = std::exp(-t), acc = 0.0;
        for (int n = 0; n < n_terms(); ++n) {
            acc += L_.cn[n] * term;
            term *= t / (n + 1.0);
        }
        return acc;
    }

    double branch1_quadrature() const {
        return quad2d([&](size_t i, double r) {
            const double w2 = w_[i] * w_[i], c = kappa_ * std::pow(r, L_.nu);
            auto f = [&](double x) {
                const double z = L_.a * x / w2 - L_.b;
                return z > 0.0 ? shadowed_rician_power_pdf(x, s_.sr) * tail_mix(c / z) : 0.0;
            };
            const double lo = L_.b * w2 / L_.a, hi = P_ * w2 / eta_;
            return lo < hi ? gauss_kronrod<double, 31>::integrate(f, lo, hi, 10, 1e-10) : 0.0;
        });
    }

    double branch2_quadrature() const {
        return quad2d([&](size_t i, double r) {
            const double w2 = w_[i] * w_[i], c = kappa2_ * std::pow(r, L_.nu);
            auto f = [&](double u) {
                // x = lo + u/(1-u), u in [0,1)
                const double lo = std::max(P_ * w2 / eta_, L_.b * w2 / L_.a);
                const double x = lo + u / (1.0 - u), jac = 1.0 / ((1.0 - u) * (1.0 - u));
                const double z = L_.a * x / w2 - L_.b;
                return z > 0.0 ? jac * shadowed_rician_power_pdf(x, s_.sr) * tail_mix(c * (1.0 + L_.b / z)) : 0.0;
            };
            return gauss_kronrod<double, 31>::integrate(f, 0.0, 1.0, 10, 1e-10);
        });
    }

    const Scenario& s_;
    const Link& L_;
    const SeriesOptions& o_;
    OpDiagnostics& d_;
    sf::CgqRule rule_;
    int M_;
    double alpha_, bb_, P_, eta_, Pab_, kappa_, kappa2_, r_max_;
    std::vector<double> zeta_, w_, om_, s_i_, pre_;
    std::map<double, std::vector<EndPoint>> ends_;
};

std::vector<double> nakagami_cn(double m) {
    return std::vector<double>(size_t(m), 1.0);
}

std::vector<double> rician_cn(double K, int cap, bool& truncated) {
    // c_n = Pr[Poisson(K) >= n]; stop once the remaining mass is negligible
    std::vector<double> c;
    double pm = std::exp(-K), cdf = 0.0;
    for (int n = 0; n <= cap; ++n) {
        const double tail = std::max(0.0, 1.0 - cdf);
        // direct tail sum when 1 - cdf loses precision
        double t = tail;
        if (tail < 1e-3) {
            t = 0.0;
            double p = pm;
            for (int j = n; j < n + 400; ++j) {
                t += p;
                p *= K / (j + 1.0);
                if (p < 1e-30 * t) break;
            }
        }
        if (t < 1e-17) return c;
        c.push_back(t);
        cdf += pm;
        pm *= K / (n + 1.0);
    }
    truncated = true;
    return c;
}

OpResult run(const Scenario& s, const Link& L, const SeriesOptions& o) {
    OpResult r;
    Evaluator ev(s, L, o, r.diag);
    const double p1 = ev.branch1();
    const double p2 = ev.branch2();
    r.diag.p_branch1 = p1;
    r.diag.p_branch2 = p2;
    r.value = clamp_probability(1.0 - p1 - p2, r.diag);
    return r;
}

void require_integer_m(const Scenario& s, bool nakagami) {
    if (!s.sr.integer_m())
        throw DomainError("channel.sr.m: the series path requires an integer fading severity");
    if (nakagami && !(s.rd.m == std::floor(s.rd.m) && s.rd.m >= 1.0))
        throw DomainError("channel.rd.m: the series path requires an integer fading severity");
}

}  // namespace

OpResult op_s2g_closed(const Scenario& s, const SeriesOptions& o) {
    require_integer_m(s, true);
    const Coefficients k = coefficients(s);
    OpResult r;
    if (s.gamma_s == 0.0) {
        r.diag.route = "closed:zero-threshold";
        return r;
    }
    if (!(k.A > 0.0)) {  // gamma_S >= mu'
        r.diag.route = "closed:ceiling";
        r.value = 1.0;
        return r;
    }
    Link L{k.A, k.B, s.gamma_s * s.noise.sd2, s.rd.m, nakagami_cn(s.rd.m), s.rd.nu, gu_pdf_pieces(s.cone)};
    return run(s, L, o);
}

OpResult op_a2a_closed(const Scenario& s, IcMode mode, const SeriesOptions& o) {
    require_integer_m(s, false);
    const Coefficients k = coefficients(s);
    OpResult r;
    if (s.gamma_a == 0.0) {
        r.diag.route = "closed:zero-threshold";
        return r;
    }
    const double a = mode == IcMode::imperfect ? k.C : k.E;
    if (!(a > 0.0)) {  // im-IC: gamma_A >= 1/mu'; either mode: mu = 1
        r.diag.route = "closed:ceiling";
        r.value = 1.0;
        return r;
    }
    bool trunc = false;
    Link L{a, k.D, s.gamma_a * s.noise.st2, 1.0 + s.rt.K, rician_cn(s.rt.K, o.cap, trunc), s.rt.nu,
           arx_pdf_pieces(s.cone)};
    OpResult out = run(s, L, o);
    out.diag.truncated = out.diag.truncated || trunc;
    return out;
}

}  // namespace sagin
