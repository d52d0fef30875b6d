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

// Exact q-series for sigma, sigma* and Cohen's T(n). Everything here is integer
// arithmetic on mpz_class; no floating point is involved.
//
//   sigma(q)  = sum_{n>=0} q^{n(n+1)/2} / ((1+q)...(1+q^n))
//   sigma*(q) = 2 sum_{n>=1} (-1)^n q^{n^2} / ((1-q)(1-q^3)...(1-q^{2n-1}))
//
// and their indefinite theta expansions, in which after removing q^{1/24} the
// exponent becomes the integer n(3n+1)/2 - j^2 (resp. j^2 - n(3n+1)/2).

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace maass {

inline constexpr std::int64_t kMaxSeriesOrder = 100000;

/// sum_{k=0}^{order} coeffs[k] q^{k + offset24/24}.
struct IntPowerSeries {
    std::int64_t offset24 = 0;
    std::int64_t order = 0;
    std::vector<mpz_class> coeffs;

    IntPowerSeries() = default;
    IntPowerSeries(std::int64_t order_, std::int64_t offset24_ = 0);

    const mpz_class& operator[](std::int64_t k) const { return coeffs.at(static_cast<std::size_t>(k)); }
    mpz_class& operator[](std::int64_t k) { return coeffs.at(static_cast<std::size_t>(k)); }
};

/// Sums and products truncate to the smaller order. Sums need equal offsets.
IntPowerSeries operator+(const IntPowerSeries& l, const IntPowerSeries& r);
IntPowerSeries operator-(const IntPowerSeries& l, const IntPowerSeries& r);
IntPowerSeries operator*(const IntPowerSeries& l, const IntPowerSeries& r);
bool operator==(const IntPowerSeries& l, const IntPowerSeries& r);

IntPowerSeries sigma_series(std::int64_t order);
IntPowerSeries sigma_star_series(std::int64_t order);

/// Sum over {n+j >= 0, n-j >= 0} u {n+j < 0, n-j < 0} of (-1)^{n+j} q^{n(3n+1)/2 - j^2}.
/// In the first region n >= |j| so the exponent is >= n(n+1)/2; in the second
/// m = -n >= |j| + 1 and the exponent is >= (m^2 + 3m - 2)/2. These give the
/// range of n; box_factor > 1 widens it (used to test that the bound is sound).
IntPowerSeries sigma_indefinite_series(std::int64_t order, std::int64_t box_factor = 1);

/// Sum over {2j+3n >= 0, 2j-3n > 0} u {2j+3n < 0, 2j-3n <= 0} of
/// (-1)^{n+j} q^{j^2 - n(3n+1)/2}. Both regions force |n| <= 2|j|/3, hence an
/// exponent >= (j^2 - |j|)/3, which bounds |j|.
IntPowerSeries sigma_star_indefinite_series(std::int64_t order, std::int64_t box_factor = 1);

enum class SeriesKind { Sigma, SigmaStar };
std::string to_string(SeriesKind kind);

struct IdentityReport {
    bool match = false;
    std::optional<std::int64_t> first_mismatch;
    std::int64_t order = 0;
};

/// Coefficientwise comparison through the smaller order.
IdentityReport compare_series(const IntPowerSeries& l, const IntPowerSeries& r);
IdentityReport verify_identity(SeriesKind kind, std::int64_t order);

/// T(n) for n = 1 mod 24, |n| <= bound, read off
///   sum T(n) q^{|n|/24} = q^{1/24} sigma(q) + q^{-1/24} sigma*(q):
/// T(24k + 1) is the q^k coefficient of sigma and T(1 - 24k), k >= 1, the q^k
/// coefficient of sigma* (q^{-1/24} q^k = q^{(24k-1)/24}).
struct TCoefficients {
    std::int64_t bound = 0;
    std::map<std::int64_t, mpz_class> table;

    bool contains(std::int64_t n) const { return table.count(n) != 0; }
    const mpz_class& at(std::int64_t n) const { return table.at(n); }
};

/// 1 <= bound <= 24 * 10^5.
TCoefficients t_coefficients(std::int64_t bound);

}  // namespace maass
