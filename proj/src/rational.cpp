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

#include "maass/rational.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace maass {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto strip = [](std::string& str) {
        while (!str.empty() && std::isspace(static_cast<unsigned char>(str.front()))) str.erase(str.begin());
        while (!str.empty() && std::isspace(static_cast<unsigned char>(str.back()))) str.pop_back();
    };
    strip(s);
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    strip(num);
    strip(den);
    auto valid_int = [](const std::string& str, bool allow_sign) {
        if (str.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (str[0] == '-' || str[0] == '+')) i = 1;
        if (i == str.size()) return false;
        for (; i < str.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(str[i]))) return false;
        return true;
    };
    if (!valid_int(num, true) || !valid_int(den, false))
        throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class n(num), d(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

RationalVec parse_rational_vec(std::string_view first, std::string_view second) {
    return {parse_rational(first), parse_rational(second)};
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational frac(const Rational& r) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    Rational out = r - Rational(fl);
    out.canonicalize();
    return out;
}

std::complex<double> unit_phase(const Rational& r) {
    Rational f = frac(r);
    // Use the symmetric representative so the argument of sin/cos stays in [-pi, pi].
    if (f > Rational(1, 2)) f -= 1;
    const double angle = 2.0 * std::numbers::pi * f.get_d();
    return {std::cos(angle), std::sin(angle)};
}

std::complex<double> unit_phase(std::int64_t num, std::int64_t den) {
    if (den <= 0) throw std::invalid_argument("unit_phase: denominator must be positive");
    std::int64_t m = num % den;
    if (m < 0) m += den;
    if (2 * m > den) m -= den;
    const double angle = 2.0 * std::numbers::pi * (static_cast<double>(m) / static_cast<double>(den));
    return {std::cos(angle), std::sin(angle)};
}

RealVec to_real(const RationalVec& v) { return {v[0].get_d(), v[1].get_d()}; }

std::int64_t to_int64(const mpz_class& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + z.get_str());
    return z.get_si();
}

std::int64_t common_denominator(const RationalVec& v) {
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), v[0].get_den_mpz_t(), v[1].get_den_mpz_t());
    if (l > 1000000000) throw std::overflow_error("denominator too large: " + l.get_str());
    return l.get_si();
}

}  // namespace maass
