// Copyright 2026 The maass-theta Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "maass/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "maass/quadrature.hpp"

namespace maass {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.57721566490153286060651209008240243;
constexpr double kK0Underflow = 745.0;

double k0_series(double x) {
    const double z = 0.25 * x * x;
    double term = 1.0, i0 = 1.0, s = 0.0, harmonic = 0.0;
    for (int k = 1; k < 200; ++k) {
        term *= z / (static_cast<double>(k) * k);
        harmonic += 1.0 / k;
        i0 += term;
        s += harmonic * term;
        if (term < 1e-18 * i0) break;
    }
    return -(std::log(0.5 * x) + kEulerGamma) * i0 + s;
}

// Steed's algorithm for the second continued fraction, order 0.
double k0_steed(double x) {
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double delh = d, h = d;
    double q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25;
    double q = a1, c = a1, a = -a1;
    double s = 1.0 + q * delh;
    for (int i = 1; i < 10000; ++i) {
        a -= 2 * i;
        c = -a * c / (i + 1.0);
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < 1e-17) break;
    }
    return std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
}

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + " must be finite");
}

double quad_tol(const Tolerance& tol) { return 0.9 * tol.eps_abs; }

// Upper end for int_0^inf exp(-pi (b0^2 + s tau^2)) d tau so that the remainder
// e^{-pi b0^2} e^{-pi s T^2} / (2 pi s T) is below target.
double gaussian_cut(double b0sq, double s, double target) {
    double cut = 1.0 / std::sqrt(s);
    auto tail = [&](double t) { return std::exp(-kPi * (b0sq + s * t * t)) / (2.0 * kPi * s * t); };
    while (tail(cut) > target) cut *= 1.25;
    return cut;
}

}  // namespace

Tolerance make_tolerance(double eps_abs, double eps_rel) {
    if (!(eps_abs >= 1e-14) || !(eps_rel > 0) || !std::isfinite(eps_abs) || !std::isfinite(eps_rel))
        throw std::invalid_argument("tolerance needs eps_abs >= 1e-14 and eps_rel > 0");
    return {eps_abs, eps_rel};
}

K0Value bessel_k0_checked(double x) {
    if (!(x > 0)) throw std::domain_error("bessel_k0 needs x > 0");
    if (x > kK0Underflow) return {0.0, true};
    return {x <= 2.0 ? k0_series(x) : k0_steed(x), false};
}

int sign_tol(double x, double scale) {
    if (std::abs(x) <= 1e-13 * scale) return 0;
    return x > 0 ? 1 : -1;
}

int sign_of_pairing(const QuadraticForm& form, const RealVec& nu, const RealVec& c) {
    const RealVec an = form.apply(nu);
    const double b = an[0] * c[0] + an[1] * c[1];
    return sign_tol(b, (std::abs(an[0]) + std::abs(an[1])) * (std::abs(c[0]) + std::abs(c[1])));
}

double full_line_integral(double q) { return std::exp(2.0 * kPi * q) * bessel_k0(2.0 * kPi * std::abs(q)); }

double gauss_segment_integral(const QuadraticForm& form, const RealVec& nu, double t1, double t2, double y,
                              const Tolerance& tol) {
    require_finite(t1, "t1");
    require_finite(t2, "t2");
    require_finite(y, "y");
    require_finite(nu[0], "nu");
    require_finite(nu[1], "nu");
    if (!(y > 0)) throw std::domain_error("gauss_segment_integral needs y > 0");
    if (t1 == t2) return 0.0;
    if (t1 > t2) return -gauss_segment_integral(form, nu, t2, t1, y, tol);
    const RealVec p = form.split_coords(nu);
    // B(nu, c(t)) = p2 e^t - p1 e^{-t}
    auto f = [&](double t) {
        const double bb = p[1] * std::exp(t) - p[0] * std::exp(-t);
        return std::exp(-kPi * y * bb * bb);
    };
    const double eps = quad_tol(tol);
    if (p[0] * p[1] > 0) {
        const double tz = 0.5 * std::log(p[0] / p[1]);
        if (tz > t1 && tz < t2)
            return quad::integrate(f, t1, tz, 0.5 * eps, tol.eps_rel) + quad::integrate(f, tz, t2, 0.5 * eps, tol.eps_rel);
    }
    return quad::integrate(f, t1, t2, eps, tol.eps_rel);
}

double damped_segment_integral(double u, double v, double y, double lo, double hi, double abs_tol) {
    if (!(y > 0)) throw std::domain_error("damped_segment_integral needs y > 0");
    if (lo == hi) return 0.0;
    if (lo > hi) return -damped_segment_integral(u, v, y, hi, lo, abs_tol);
    if (u == 0 && v == 0) {
        if (!std::isfinite(lo) || !std::isfinite(hi)) throw std::domain_error("integrand does not decay");
        return hi - lo;
    }
    // Remainder past the cut: int_T^inf exp(-c e^{2t}) dt <= e^{-z} / (2 z), z = c e^{2T}.
    auto cut_for = [&](double c) {
        double z = std::max(1.0, std::log(1.0 / (10.0 * abs_tol)));
        while (std::exp(-z) / (2.0 * z) > 0.1 * abs_tol) z *= 1.1;
        return 0.5 * std::log(z / c);
    };
    double budget = abs_tol;
    if (std::isinf(hi)) {
        if (!(v > 0)) throw std::domain_error("integrand does not decay as t -> +infinity");
        hi = std::max(cut_for(kPi * y * v), lo);
        budget -= 0.1 * abs_tol;
    }
    if (std::isinf(lo)) {
        if (!(u > 0)) throw std::domain_error("integrand does not decay as t -> -infinity");
        lo = std::min(-cut_for(kPi * y * u), hi);
        budget -= 0.1 * abs_tol;
    }
    if (lo == hi) return 0.0;
    auto f = [&](double t) { return std::exp(-kPi * y * (u * std::exp(-2.0 * t) + v * std::exp(2.0 * t))); };
    if (u > 0 && v > 0) {
        const double peak = 0.25 * std::log(u / v);
        if (peak > lo && peak < hi)
            return quad::integrate(f, lo, peak, 0.5 * budget) + quad::integrate(f, peak, hi, 0.5 * budget);
    }
    return quad::integrate(f, lo, hi, budget);
}

double alpha_bound(const QuadraticForm& form, double t0, const RealVec& nu) {
    const auto g = c_of_t(form, t0);
    const double b0 = form.b(nu, g.c), b0p = form.b(nu, g.cperp);
    return std::exp(-kPi * b0 * b0) / (2.0 * std::sqrt(b0 * b0 + b0p * b0p));
}

double alpha(const QuadraticForm& form, double t0, const RealVec& nu, const Tolerance& tol) {
    require_finite(t0, "t0");
    const RealVec p = form.split_coords(nu);
    const double qv = p[0] * p[1];
    if (sign_tol(qv, p[0] * p[0] + p[1] * p[1]) == 0) throw std::domain_error("alpha: Q(nu) = 0");
    const auto g = c_of_t(form, t0);
    const double b0 = form.b(nu, g.c), b0p = form.b(nu, g.cperp);
    const int s = sign_of_pairing(form, nu, g.c) * sign_of_pairing(form, nu, g.cperp);
    if (s == 0) return 0.0;
    // c(t0 + s) = c0 cosh s + c0perp sinh s; the negative branch mirrors s -> -s.
    const double bp = s > 0 ? b0p : -b0p;
    auto f = [&](double x) {
        const double bb = b0 * std::cosh(x) + bp * std::sinh(x);
        return std::exp(-kPi * bb * bb);
    };
    const double cut = gaussian_cut(b0 * b0, b0 * b0 + b0p * b0p, 0.1 * tol.eps_abs);
    const double v = quad::integrate(f, 0.0, cut, 0.8 * tol.eps_abs, tol.eps_rel);
    return s > 0 ? v : -v;
}

SegmentDecomposition lemma_segment_decomposition(const QuadraticForm& form, const RealVec& nu, double t1, double t2,
                                                 const Tolerance& tol) {
    const RealVec p = form.split_coords(nu);
    const double qv = p[0] * p[1];
    if (sign_tol(qv, p[0] * p[0] + p[1] * p[1]) == 0) throw std::domain_error("lemma_segment_decomposition: Q(nu) = 0");
    SegmentDecomposition out;
    out.alpha1 = alpha(form, t1, nu, tol);
    out.alpha2 = alpha(form, t2, nu, tol);
    if (t1 == t2) return out;
    const auto g1 = c_of_t(form, t1), g2 = c_of_t(form, t2);
    const int s12 = sign_of_pairing(form, nu, g1.c) * sign_of_pairing(form, nu, g2.c);
    const int s12p = sign_of_pairing(form, nu, g1.cperp) * sign_of_pairing(form, nu, g2.cperp);
    const double weight = 0.5 * (1 - s12) + 0.5 * (1 - s12p);
    out.indicator = (t2 > t1 ? 1.0 : -1.0) * weight * full_line_integral(form.q(nu));
    return out;
}

}  // namespace maass
