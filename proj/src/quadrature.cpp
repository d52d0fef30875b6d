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

#include "maass/quadrature.hpp"

#include <numbers>

namespace maass::quad {

namespace {

GaussLegendreRule build_rule() {
    GaussLegendreRule rule;
    constexpr int n = static_cast<int>(kPanelOrder);
    for (int i = 0; i < n; ++i) {
        // Chebyshev-like initial guess, then Newton on P_n.
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / j;
            }
            dp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) break;
        }
        rule.nodes[i] = -z;
        rule.weights[i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
    return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre15() {
    static const GaussLegendreRule rule = build_rule();
    return rule;
}

}  // namespace maass::quad
