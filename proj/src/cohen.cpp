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

#include "maass/cohen.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "maass/parallel.hpp"
#include "maass/qseries.hpp"
#include "maass/special.hpp"

namespace maass {

namespace {

constexpr double kPi = std::numbers::pi;

RationalVec rv(long p1, long q1, long p2, long q2) { return {ratio(p1, q1), ratio(p2, q2)}; }

CohenExample build_cohen() {
    CohenExample ex;
    ex.form = split({{{3, 0}, {0, -2}}});
    const double s3 = std::sqrt(3.0);
    ex.t1 = t_of_c(ex.form, {-2.0 / s3, 3.0 / s3});
    ex.t2 = t_of_c(ex.form, {2.0 / s3, 3.0 / s3});
    ex.gamma = {{{5, 4}, {6, 5}}};
    ex.components = {{{rv(1, 6, 0, 1), rv(1, 6, 1, 4)}, {rv(1, 6, 1, 4), rv(1, 6, 0, 1)}, {rv(1, 6, 1, 4), rv(1, 6, 1, 4)}}};
    return ex;
}

double k0_majorant(double x) { return std::sqrt(kPi / (2.0 * x)) * std::exp(-x); }

}  // namespace

ThetaParams CohenExample::params(int component) const {
    const auto& [a, b] = components.at(static_cast<std::size_t>(component));
    return ThetaParams{form, a, b, t1, t2};
}

const CohenExample& cohen_example() {
    static const CohenExample ex = build_cohen();
    return ex;
}

Phi0Result cohen_phi0(Complex tau, double eps, const EvalWindow& window) {
    if (!(tau.imag() > 0) || !std::isfinite(tau.real()) || !std::isfinite(tau.imag()))
        throw std::domain_error("tau must lie in the upper half plane");
    if (!(eps > 0)) throw std::invalid_argument("eps must be positive");
    const double x = tau.real(), y = tau.imag();
    const double ylo = window.y_lo > 0 ? std::min(window.y_lo, y) : y;
    const double yhi = std::max(window.y_hi, y);
    // Tail over |n| > N of |n| y^{1/2} K0(2 pi |n| y / 24), both signs, at the
    // worst y of the window.
    auto tail = [&](std::int64_t n0) {
        double worst = 0.0;
        for (double yy : {ylo, yhi}) {
            double sum = 0.0;
            for (std::int64_t n = n0 + 1;; ++n) {
                const double term = 2.0 * static_cast<double>(n) * std::sqrt(yy) * k0_majorant(2.0 * kPi * n * yy / 24.0);
                sum += term;
                if (term <= 1e-18 * sum || term == 0.0) break;
            }
            worst = std::max(worst, sum);
        }
        return worst;
    };
    std::int64_t bound = 24;
    while (tail(bound) > eps) {
        bound += 24;
        if (bound > 24 * kMaxSeriesOrder) throw std::domain_error("phi_0 truncation exceeds the T(n) table range");
    }
    const TCoefficients tc = t_coefficients(bound);
    parallel::ComplexCompensatedSum acc;
    for (const auto& [n, t] : tc.table) {
        if (t == 0) continue;
        if (mpz_class(abs(t)) > mpz_class(static_cast<long>(std::llabs(n)))) throw std::logic_error("T(n) exceeds the |n| majorant at n = " + std::to_string(n));
        const double k0 = bessel_k0(2.0 * kPi * static_cast<double>(std::llabs(n)) * y / 24.0);
        acc.add(t.get_d() * k0 * std::polar(1.0, 2.0 * kPi * std::remainder(n * x / 24.0, 1.0)));
    }
    return {std::sqrt(y) * acc.value(), bound, tail(bound)};
}

double verify_cohen_identity(const std::vector<Complex>& taus, double eps, CohenSide side, Complex phase) {
    const ThetaParams p = cohen_example().params(0);
    double worst = 0.0;
    for (Complex tau : taus) {
        const Complex f = side == CohenSide::Phi ? phi(p, tau, eps).value : phi_hat(p, tau, eps).value;
        worst = std::max(worst, std::abs(f - phase * cohen_phi0(tau, eps).value));
    }
    return worst;
}

Vec3 vector_phi_hat(Complex tau, double eps) {
    const auto& ex = cohen_example();
    const double r2 = std::sqrt(2.0);
    return {phi_hat(ex.params(0), tau, eps).value, r2 * phi_hat(ex.params(1), tau, eps).value,
            r2 * phi_hat(ex.params(2), tau, eps).value};
}

double verify_vector_T(Complex tau, double eps) {
    const Vec3 v = vector_phi_hat(tau, eps), w = vector_phi_hat(tau + 1.0, eps);
    const Vec3 mv{zeta(24) * v[0], zeta(48, 5) * v[2], zeta(48, -7) * v[1]};
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(w[i] - mv[i]));
    return worst;
}

double verify_vector_S(Complex tau, double eps) {
    const Vec3 v = vector_phi_hat(tau, eps), w = vector_phi_hat(-1.0 / tau, eps);
    const Vec3 mv{v[1], v[0], v[2]};
    double worst = 0.0;
    for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(w[i] - mv[i]));
    return worst;
}

char to_char(Letter l) {
    switch (l) {
        case Letter::T: return 'T';
        case Letter::TInv: return 't';
        case Letter::L: return 'L';
        case Letter::LInv: return 'l';
        case Letter::MinusI: return '-';
    }
    return '?';
}

IntMat2 letter_matrix(Letter l) {
    switch (l) {
        case Letter::T: return {{{1, 1}, {0, 1}}};
        case Letter::TInv: return {{{1, -1}, {0, 1}}};
        case Letter::L: return {{{1, 0}, {2, 1}}};
        case Letter::LInv: return {{{1, 0}, {-2, 1}}};
        case Letter::MinusI: return {{{-1, 0}, {0, -1}}};
    }
    return kIdentity;
}

IntMat2 word_product(const std::vector<Letter>& word) {
    IntMat2 m = kIdentity;
    for (Letter l : word) m = multiply(m, letter_matrix(l));
    return m;
}

IntMat2 MultiplierWord::product() const { return word_product(word); }

int MultiplierWord::exponent() const {
    long e = 0;
    for (Letter l : word) {
        if (l == Letter::T || l == Letter::L) ++e;
        if (l == Letter::TInv || l == Letter::LInv) --e;
    }
    return static_cast<int>(((e % 24) + 24) % 24);
}

std::string MultiplierWord::to_string() const {
    std::string s;
    for (Letter l : word) s += to_char(l);
    return s.empty() ? "I" : s;
}

MultiplierWord gamma02_decompose(const IntMat2& gamma) {
    const std::int64_t det = gamma[0][0] * gamma[1][1] - gamma[0][1] * gamma[1][0];
    if (det != 1) throw std::invalid_argument("matrix does not have determinant 1");
    if (gamma[1][0] % 2 != 0) throw std::invalid_argument("lower-left entry is odd; matrix is not in Gamma_0(2)");
    // Reduce m = X gamma to +-T^n, recording the letters of X in application order.
    IntMat2 m = gamma;
    std::vector<std::pair<Letter, std::int64_t>> applied;
    auto left = [&](Letter l, std::int64_t k) {
        if (k == 0) return;
        const IntMat2 step = letter_matrix(l);
        const IntMat2 inv = inverse_sl2(step);
        for (std::int64_t i = 0; i < std::llabs(k); ++i) m = multiply(k > 0 ? step : inv, m);
        applied.emplace_back(l, k);
    };
    auto nearest = [](std::int64_t p, std::int64_t q) {
        return static_cast<std::int64_t>(std::llround(static_cast<long double>(p) / static_cast<long double>(q)));
    };
    while (m[1][0] != 0) {
        left(Letter::T, -nearest(m[0][0], m[1][0]));
        if (m[1][0] == 0) break;
        left(Letter::L, -nearest(m[1][0], 2 * m[0][0]));
    }
    // X = g_m ... g_1, so gamma = g_1^{-1} ... g_m^{-1} (+-T^n).
    MultiplierWord out;
    out.gamma = gamma;
    for (const auto& [letter, k] : applied) {
        const Letter l = k > 0 ? (letter == Letter::T ? Letter::TInv : Letter::LInv) : letter;
        for (std::int64_t i = 0; i < std::llabs(k); ++i) out.word.push_back(l);
    }
    if (m[0][0] == -1) {
        out.word.push_back(Letter::MinusI);
        m = multiply(letter_matrix(Letter::MinusI), m);
    }
    const std::int64_t n = m[0][1];
    for (std::int64_t i = 0; i < std::llabs(n); ++i) out.word.push_back(n > 0 ? Letter::T : Letter::TInv);
    if (out.product() != gamma) throw std::logic_error("Gamma_0(2) descent produced a wrong word");
    return out;
}

Complex mobius(const IntMat2& g, Complex tau) {
    return (static_cast<double>(g[0][0]) * tau + static_cast<double>(g[0][1])) /
           (static_cast<double>(g[1][0]) * tau + static_cast<double>(g[1][1]));
}

double verify_multiplier(const IntMat2& gamma, Complex tau, double eps) {
    const MultiplierWord w = gamma02_decompose(gamma);
    const ThetaParams p = cohen_example().params(0);
    const Complex lhs = phi_hat(p, mobius(gamma, tau), eps).value;
    const Complex rhs = w.multiplier() * phi_hat(p, tau, eps).value;
    return std::abs(lhs - rhs);
}

double verify_eigenfunction(const std::function<Complex(Complex)>& f, Complex tau, double h) {
    if (!(h >= 1e-4 && h <= 1e-2)) throw std::invalid_argument("stencil step h must lie in [1e-4, 1e-2]");
    const Complex lap = stencil_laplacian(f, tau, h);
    return std::abs(lap - 0.25 * f(tau));
}

}  // namespace maass
