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
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace maass {

using Rational = mpq_class;
using RationalVec = std::array<Rational, 2>;
using IntVec = std::array<std::int64_t, 2>;
using RealVec = std::array<double, 2>;

/// Parses "p/q", "p" or "-p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);
RationalVec parse_rational_vec(std::string_view first, std::string_view second);

std::string to_string(const Rational& r);

/// n/d in lowest terms (mpq_class(n, d) alone does not canonicalize).
inline Rational ratio(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

/// Representative of r modulo 1 in [0, 1).
Rational frac(const Rational& r);

/// e^{2 pi i r}, with r reduced mod 1 exactly before any trigonometry.
std::complex<double> unit_phase(const Rational& r);

/// e^{2 pi i num/den} for an integer fraction, reduced mod den first.
std::complex<double> unit_phase(std::int64_t num, std::int64_t den);

RealVec to_real(const RationalVec& v);

/// Least common denominator of a rational vector. Throws std::overflow_error
/// if it does not fit the working range (<= 10^9).
std::int64_t common_denominator(const RationalVec& v);

std::int64_t to_int64(const mpz_class& z);

inline RationalVec operator+(const RationalVec& u, const RationalVec& v) {
    return {Rational(u[0] + v[0]), Rational(u[1] + v[1])};
}
inline RationalVec operator-(const RationalVec& u, const RationalVec& v) {
    return {Rational(u[0] - v[0]), Rational(u[1] - v[1])};
}
inline RationalVec operator-(const RationalVec& u) {
    return {Rational(-u[0]), Rational(-u[1])};
}

}  // namespace maass
