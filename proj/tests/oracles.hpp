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

#pragma once

// Reference computations for the tests. Nothing here calls into the library's
// numerical kernels: integrals use long double trapezoid / Simpson rules and the
// geodesic of diag(3,-2) is parametrized by hand.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

namespace oracle {

using ld = long double;
inline constexpr ld kPi = 3.141592653589793238462643383279502884L;

// K0(x) = int_0^inf exp(-x cosh t) dt. The integrand is analytic and decays
// doubly exponentially, so the plain trapezoid rule converges geometrically.
inline ld k0(ld x) {
    const ld top = std::acosh(1.0L + 60.0L / x);
    const int n = 4000;
    const ld h = top / n;
    ld s = 0.5L * std::exp(-x);
    for (int k = 1; k <= n; ++k) s += std::exp(-x * std::cosh(k * h));
    return s * h;
}

// Composite Simpson on [lo, hi] with 2n panels.
template <typename F>
ld simpson(const F& f, ld lo, ld hi, int n = 2000) {
    const ld h = (hi - lo) / (2 * n);
    ld s = f(lo) + f(hi);
    for (int k = 1; k < 2 * n; ++k) s += f(lo + k * h) * ((k % 2) ? 4.0L : 2.0L);
    return s * h / 3.0L;
}

// For A = diag(3,-2): c(s) = (sqrt(2/3) sinh s, cosh s) has Q(c) = -1 and unit
// speed, with c'(s) = cperp(s) = (sqrt(2/3) cosh s, sinh s).
struct Diag32 {
    static ld q(ld x, ld y) { return 1.5L * x * x - y * y; }
    static ld b(ld x1, ld y1, ld x2, ld y2) { return 3.0L * x1 * x2 - 2.0L * y1 * y2; }
    static void c(ld s, ld& x, ld& y) {
        x = std::sqrt(2.0L / 3.0L) * std::sinh(s);
        y = std::cosh(s);
    }
    static void cperp(ld s, ld& x, ld& y) {
        x = std::sqrt(2.0L / 3.0L) * std::cosh(s);
        y = std::sinh(s);
    }
};

inline int sgn(ld v) { return (v > 0) - (v < 0); }

// Brute-force PhiHat / Phi for diag(3,-2) with a = (a1n/a1d, a2n/a2d) and
// character e(B(nu, b)), summed over the box |n_i| <= box.
struct Coset {
    ld a1, a2, b1, b2;
};

inline std::complex<ld> phase(ld x) { return {std::cos(2 * kPi * x), std::sin(2 * kPi * x)}; }

inline std::complex<ld> phi_hat_diag32(const Coset& p, ld s1, ld s2, ld x, ld y, int box = 8) {
    std::complex<ld> sum = 0;
    for (int i = -box; i <= box; ++i)
        for (int j = -box; j <= box; ++j) {
            const ld n1 = p.a1 + i, n2 = p.a2 + j;
            const ld q = Diag32::q(n1, n2);
            const ld integral = simpson(
                [&](ld s) {
                    ld cx, cy;
                    Diag32::c(s, cx, cy);
                    const ld bb = Diag32::b(n1, n2, cx, cy);
                    return std::exp(-kPi * y * (bb * bb + 2 * q));
                },
                s1, s2, 600);
            sum += phase(q * x + Diag32::b(n1, n2, p.b1, p.b2)) * integral;
        }
    return sum * std::sqrt(y);
}

inline std::complex<ld> phi_diag32(const Coset& p, ld s1, ld s2, ld x, ld y, int box = 8) {
    ld c1x, c1y, c2x, c2y, p1x, p1y, p2x, p2y;
    Diag32::c(s1, c1x, c1y);
    Diag32::c(s2, c2x, c2y);
    Diag32::cperp(s1, p1x, p1y);
    Diag32::cperp(s2, p2x, p2y);
    std::complex<ld> sum = 0;
    for (int i = -box; i <= box; ++i)
        for (int j = -box; j <= box; ++j) {
            const ld n1 = p.a1 + i, n2 = p.a2 + j;
            const ld q = Diag32::q(n1, n2);
            const ld w1 = 0.5L * (1 - sgn(Diag32::b(n1, n2, c1x, c1y)) * sgn(Diag32::b(n1, n2, c2x, c2y)));
            const ld w2 = 0.5L * (1 - sgn(Diag32::b(n1, n2, p1x, p1y)) * sgn(Diag32::b(n1, n2, p2x, p2y)));
            ld k = 0;
            if (w1 != 0 && q > 0) k += w1 * k0(2 * kPi * q * y);
            if (w2 != 0 && q < 0) k += w2 * k0(-2 * kPi * q * y);
            if (k != 0) sum += phase(q * x + Diag32::b(n1, n2, p.b1, p.b2)) * k;
        }
    return sum * std::sqrt(y) * ld(sgn(s2 - s1));
}

// Power series with int64 coefficients, truncated at order n; the naive
// O(n^2)-per-factor way.
using Series = std::vector<std::int64_t>;

inline Series mul(const Series& a, const Series& b) {
    Series r(a.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; i + j < a.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// 1 / (1 + sign q^k) as an explicit geometric series.
inline Series inv_binomial(std::size_t n, std::int64_t k, int sign) {
    Series r(n, 0);
    std::int64_t c = 1;
    for (std::size_t e = 0; e < n; e += static_cast<std::size_t>(k), c *= -sign) r[e] = c;
    return r;
}

inline Series sigma(std::size_t order) {
    const std::size_t n = order + 1;
    Series total(n, 0);
    for (std::int64_t m = 0; m * (m + 1) / 2 <= static_cast<std::int64_t>(order); ++m) {
        Series t(n, 0);
        t[static_cast<std::size_t>(m * (m + 1) / 2)] = 1;
        for (std::int64_t k = 1; k <= m; ++k) t = mul(t, inv_binomial(n, k, +1));
        for (std::size_t i = 0; i < n; ++i) total[i] += t[i];
    }
    return total;
}

inline Series sigma_star(std::size_t order) {
    const std::size_t n = order + 1;
    Series total(n, 0);
    for (std::int64_t m = 1; m * m <= static_cast<std::int64_t>(order); ++m) {
        Series t(n, 0);
        t[static_cast<std::size_t>(m * m)] = (m % 2 ? -2 : 2);
        for (std::int64_t k = 1; k <= 2 * m - 1; k += 2) t = mul(t, inv_binomial(n, k, -1));
        for (std::size_t i = 0; i < n; ++i) total[i] += t[i];
    }
    return total;
}

}  // namespace oracle
