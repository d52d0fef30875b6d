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

#include "maass/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace maass {

namespace {

void require_order(std::int64_t order) {
    if (order < 1 || order > kMaxSeriesOrder)
        throw std::invalid_argument("series order must lie in [1, " + std::to_string(kMaxSeriesOrder) + "]");
}

// Largest x >= 0 with x(x+1)/2 <= order style bounds are found by stepping; the
// ranges involved are O(sqrt(order)).
std::int64_t last_n(std::int64_t order, std::int64_t (*minorant)(std::int64_t)) {
    std::int64_t n = 0;
    while (minorant(n + 1) <= order) ++n;
    return n;
}

void accumulate(IntPowerSeries& s, std::int64_t e, int sign) {
    if (e < 0 || e > s.order) return;
    if (sign > 0)
        ++s[e];
    else
        --s[e];
}

}  // namespace

IntPowerSeries::IntPowerSeries(std::int64_t order_, std::int64_t offset24_)
    : offset24(offset24_), order(order_), coeffs(static_cast<std::size_t>(order_ + 1)) {
    if (order_ < 0) throw std::invalid_argument("negative series order");
}

IntPowerSeries operator+(const IntPowerSeries& l, const IntPowerSeries& r) {
    if (l.offset24 != r.offset24) throw std::invalid_argument("series offsets differ");
    IntPowerSeries out(std::min(l.order, r.order), l.offset24);
    for (std::int64_t k = 0; k <= out.order; ++k) out[k] = l[k] + r[k];
    return out;
}

IntPowerSeries operator-(const IntPowerSeries& l, const IntPowerSeries& r) {
    if (l.offset24 != r.offset24) throw std::invalid_argument("series offsets differ");
    IntPowerSeries out(std::min(l.order, r.order), l.offset24);
    for (std::int64_t k = 0; k <= out.order; ++k) out[k] = l[k] - r[k];
    return out;
}

IntPowerSeries operator*(const IntPowerSeries& l, const IntPowerSeries& r) {
    IntPowerSeries out(std::min(l.order, r.order), l.offset24 + r.offset24);
    for (std::int64_t i = 0; i <= out.order; ++i) {
        if (l[i] == 0) continue;
        for (std::int64_t j = 0; i + j <= out.order; ++j) out[i + j] += l[i] * r[j];
    }
    return out;
}

bool operator==(const IntPowerSeries& l, const IntPowerSeries& r) {
    return l.offset24 == r.offset24 && l.order == r.order && l.coeffs == r.coeffs;
}

IntPowerSeries sigma_series(std::int64_t order) {
    require_order(order);
    IntPowerSeries out(order);
    // s holds 1/((1+q)...(1+q^n)); dividing by 1+q^n in place: s[i] -= s[i-n], ascending.
    std::vector<mpz_class> s(static_cast<std::size_t>(order + 1));
    s[0] = 1;
    for (std::int64_t n = 0; n * (n + 1) / 2 <= order; ++n) {
        if (n > 0)
            for (std::int64_t i = n; i <= order; ++i) s[i] -= s[i - n];
        const std::int64_t shift = n * (n + 1) / 2;
        for (std::int64_t i = 0; i + shift <= order; ++i) out[i + shift] += s[i];
    }
    return out;
}

IntPowerSeries sigma_star_series(std::int64_t order) {
    require_order(order);
    IntPowerSeries out(order);
    // p holds 1/((1-q)(1-q^3)...(1-q^{2n-1})); p[i] += p[i-k] ascending.
    std::vector<mpz_class> p(static_cast<std::size_t>(order + 1));
    p[0] = 1;
    for (std::int64_t n = 1; n * n <= order; ++n) {
        const std::int64_t k = 2 * n - 1;
        for (std::int64_t i = k; i <= order; ++i) p[i] += p[i - k];
        const std::int64_t shift = n * n;
        const int sign = n % 2 == 0 ? 2 : -2;
        for (std::int64_t i = 0; i + shift <= order; ++i) out[i + shift] += sign * p[i];
    }
    return out;
}

IntPowerSeries sigma_indefinite_series(std::int64_t order, std::int64_t box_factor) {
    require_order(order);
    if (box_factor < 1) throw std::invalid_argument("box factor must be >= 1");
    IntPowerSeries out(order);
    // Region n >= |j|: exponent >= n(n+1)/2.
    const std::int64_t n1 = box_factor * last_n(order, [](std::int64_t n) { return n * (n + 1) / 2; });
    // Region -n = m >= |j| + 1: exponent >= (m^2 + 3m - 2)/2.
    const std::int64_t m2 = box_factor * last_n(order, [](std::int64_t m) { return (m * m + 3 * m - 2) / 2; });
    const std::int64_t nmax = std::max(n1, m2) + 1;
    for (std::int64_t n = -nmax; n <= nmax; ++n) {
        const std::int64_t jmax = std::abs(n) + 1;
        for (std::int64_t j = -jmax; j <= jmax; ++j) {
            const bool r1 = n + j >= 0 && n - j >= 0;
            const bool r2 = n + j < 0 && n - j < 0;
            if (!r1 && !r2) continue;
            const std::int64_t e = n * (3 * n + 1) / 2 - j * j;
            accumulate(out, e, (n + j) % 2 == 0 ? 1 : -1);
        }
    }
    return out;
}

IntPowerSeries sigma_star_indefinite_series(std::int64_t order, std::int64_t box_factor) {
    require_order(order);
    if (box_factor < 1) throw std::invalid_argument("box factor must be >= 1");
    IntPowerSeries out(order);
    // |n| <= 2|j|/3 in both regions: exponent >= (j^2 - |j|)/3.
    const std::int64_t jmax = box_factor * last_n(order, [](std::int64_t j) { return (j * j - j) / 3; }) + 1;
    for (std::int64_t j = -jmax; j <= jmax; ++j) {
        const std::int64_t nmax = box_factor * (2 * std::abs(j)) / 3 + 1;
        for (std::int64_t n = -nmax; n <= nmax; ++n) {
            const bool r1 = 2 * j + 3 * n >= 0 && 2 * j - 3 * n > 0;
            const bool r2 = 2 * j + 3 * n < 0 && 2 * j - 3 * n <= 0;
            if (!r1 && !r2) continue;
            const std::int64_t e = j * j - n * (3 * n + 1) / 2;
            accumulate(out, e, (n + j) % 2 == 0 ? 1 : -1);
        }
    }
    return out;
}

std::string to_string(SeriesKind kind) { return kind == SeriesKind::Sigma ? "sigma" : "sigma-star"; }

IdentityReport compare_series(const IntPowerSeries& l, const IntPowerSeries& r) {
    IdentityReport rep;
    rep.order = std::min(l.order, r.order);
    rep.match = l.offset24 == r.offset24;
    if (!rep.match) return rep;
    for (std::int64_t k = 0; k <= rep.order; ++k)
        if (l[k] != r[k]) {
            rep.match = false;
            rep.first_mismatch = k;
            break;
        }
    return rep;
}

IdentityReport verify_identity(SeriesKind kind, std::int64_t order) {
    if (kind == SeriesKind::Sigma) return compare_series(sigma_series(order), sigma_indefinite_series(order));
    return compare_series(sigma_star_series(order), sigma_star_indefinite_series(order));
}

TCoefficients t_coefficients(std::int64_t bound) {
    if (bound < 1 || bound > 24 * kMaxSeriesOrder) throw std::invalid_argument("T(n) bound must lie in [1, 2400000]");
    TCoefficients out;
    out.bound = bound;
    const std::int64_t kpos = (bound - 1) / 24;  // 24k + 1 <= bound
    const std::int64_t kneg = (bound + 1) / 24;  // 24k - 1 <= bound
    const IntPowerSeries s = sigma_series(std::max<std::int64_t>(1, kpos));
    for (std::int64_t k = 0; k <= kpos; ++k) out.table[24 * k + 1] = s[k];
    if (kneg >= 1) {
        const IntPowerSeries t = sigma_star_series(kneg);
        for (std::int64_t k = 1; k <= kneg; ++k) out.table[1 - 24 * k] = t[k];
    }
    return out;
}

}  // namespace maass
