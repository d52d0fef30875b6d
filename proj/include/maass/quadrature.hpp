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

#include <array>
#include <cmath>
#include <cstddef>

namespace maass::quad {

inline constexpr std::size_t kPanelOrder = 15;

struct GaussLegendreRule {
    std::array<double, kPanelOrder> nodes{};
    std::array<double, kPanelOrder> weights{};
};

/// 15-point Gauss-Legendre rule on [-1, 1], nodes from Newton iteration on P_15.
const GaussLegendreRule& gauss_legendre15();

template <typename F>
double gl_panel(const F& f, double a, double b) {
    const auto& rule = gauss_legendre15();
    const double half = 0.5 * (b - a), mid = 0.5 * (a + b);
    double s = 0.0;
    for (std::size_t i = 0; i < kPanelOrder; ++i) s += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return s * half;
}

namespace detail {

template <typename F>
double adapt(const F& f, double a, double b, double whole, double tol, double rel, int depth) {
    const double m = 0.5 * (a + b);
    const double left = gl_panel(f, a, m);
    const double right = gl_panel(f, m, b);
    const double refined = left + right;
    const double err = std::abs(refined - whole);
    if (err <= tol || err <= rel * std::abs(refined) || err <= 0x1p-50 * std::abs(refined) || depth >= 40 || m == a || m == b) return refined;
    return adapt(f, a, m, left, 0.5 * tol, rel, depth + 1) + adapt(f, m, b, right, 0.5 * tol, rel, depth + 1);
}

}  // namespace detail

/// Adaptive Gauss-Legendre: 15-point panels, bisection while the panel and its
/// two halves disagree by more than the (halved per level) tolerance.
template <typename F>
double integrate(const F& f, double a, double b, double abs_tol, double rel_tol = 0.0) {
    if (a == b) return 0.0;
    return detail::adapt(f, a, b, gl_panel(f, a, b), abs_tol, rel_tol, 0);
}

}  // namespace maass::quad
