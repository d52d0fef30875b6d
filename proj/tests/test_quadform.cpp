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

#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "maass/quadform.hpp"
#include "maass/rational.hpp"

using namespace maass;

TEST_SUITE("quadform") {

TEST_CASE("rational parsing and reduction") {
    CHECK(parse_rational("1/6") == Rational(1, 6));
    CHECK(parse_rational("-4/6") == Rational(-2, 3));
    CHECK(parse_rational("7") == Rational(7));
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK(frac(Rational(-1, 3)) == Rational(2, 3));
    CHECK(frac(Rational(7, 2)) == Rational(1, 2));
    const auto i = unit_phase(Rational(5, 4));
    CHECK(std::abs(i - std::complex<double>(0, 1)) < 1e-15);
    CHECK(std::abs(unit_phase(-23, 24) - unit_phase(1, 24)) < 1e-15);
    CHECK(common_denominator({Rational(1, 6), Rational(1, 4)}) == 12);
}

TEST_CASE("splitting reproduces the form") {
    for (const IntMat2 a : {IntMat2{{{3, 0}, {0, -2}}}, IntMat2{{{1, 0}, {0, -24}}}, IntMat2{{{2, 3}, {3, 1}}},
                            IntMat2{{{0, 1}, {1, 0}}}, IntMat2{{{0, 2}, {2, 3}}}, IntMat2{{{-5, 1}, {1, 2}}}}) {
        CAPTURE(a[0][1]);
        const QuadraticForm f = split(a);
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> u(-3, 3);
        for (int k = 0; k < 50; ++k) {
            const RealVec v{u(rng), u(rng)}, w{u(rng), u(rng)};
            const double exact_q = 0.5 * (a[0][0] * v[0] * v[0] + 2 * a[0][1] * v[0] * v[1] + a[1][1] * v[1] * v[1]);
            const RealVec p = f.split_coords(v);
            CHECK(p[0] * p[1] == doctest::Approx(exact_q).epsilon(1e-12));
            const double exact_b = a[0][0] * v[0] * w[0] + a[0][1] * (v[0] * w[1] + v[1] * w[0]) + a[1][1] * v[1] * w[1];
            CHECK(f.b(v, w) == doctest::Approx(exact_b).epsilon(1e-12));
        }
        for (double t : {-3.0, -0.4, 0.0, 1.7}) {
            const GeodesicPoint g = c_of_t(f, t);
            CHECK(f.q(g.c) == doctest::Approx(-1.0).epsilon(1e-12));
            CHECK(f.q(g.cperp) == doctest::Approx(1.0).epsilon(1e-12));
            CHECK(std::abs(f.b(g.c, g.cperp)) < 1e-11);
            CHECK(t_of_c(f, g.c) == doctest::Approx(t).epsilon(1e-12));
        }
    }
}

TEST_CASE("geodesic derivative is cperp") {
    const QuadraticForm f = split({{{3, 0}, {0, -2}}});
    const double t = 0.3, h = 1e-5;
    const RealVec cp = c_of_t(f, t + h).c, cm = c_of_t(f, t - h).c;
    const RealVec perp = c_of_t(f, t).cperp;
    CHECK((cp[0] - cm[0]) / (2 * h) == doctest::Approx(perp[0]).epsilon(1e-8));
    CHECK((cp[1] - cm[1]) / (2 * h) == doctest::Approx(perp[1]).epsilon(1e-8));
}

TEST_CASE("gauge shift reparametrizes the geodesic") {
    const QuadraticForm f0 = split({{{3, 0}, {0, -2}}});
    const QuadraticForm f1 = split({{{3, 0}, {0, -2}}}, 0.37);
    for (double t : {-1.0, 0.0, 2.0}) {
        const RealVec a = c_of_t(f1, t).c, b = c_of_t(f0, t - 0.37).c;
        CHECK(a[0] == doctest::Approx(b[0]).epsilon(1e-12));
        CHECK(a[1] == doctest::Approx(b[1]).epsilon(1e-12));
    }
}

TEST_CASE("the Cohen vectors lie on C_Q") {
    // c1 = (-2,3)/sqrt3, c2 = (2,3)/sqrt3 for A = diag(3,-2).
    const QuadraticForm f = split({{{3, 0}, {0, -2}}});
    const double s3 = std::sqrt(3.0);
    const double t1 = t_of_c(f, {-2 / s3, 3 / s3}), t2 = t_of_c(f, {2 / s3, 3 / s3});
    CHECK(t2 - t1 == doctest::Approx(2 * std::asinh(std::sqrt(2.0))).epsilon(1e-12));
    CHECK_THROWS_AS(t_of_c(f, {2 / s3, -3 / s3}), std::domain_error);
    CHECK_THROWS_AS(t_of_c(f, {1, 1}), std::domain_error);
}

TEST_CASE("invalid forms are rejected") {
    CHECK_THROWS_AS(split({{{1, 0}, {0, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(split({{{1, 1}, {0, -1}}}), std::invalid_argument);
    CHECK_THROWS_AS(split({{{1, 1}, {1, 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(c_of_t(split({{{3, 0}, {0, -2}}}), 51.0), std::domain_error);
}

// Brute force over all integer matrices with entries in [-B, B], checked with
// exact integer arithmetic; orientation via B(g c, c) < 0 on the explicit
// c = (0, 1/sqrt2) of diag(3,-2).
std::set<std::array<std::int64_t, 4>> brute_automorphs(std::int64_t bound) {
    std::set<std::array<std::int64_t, 4>> out;
    for (std::int64_t p = -bound; p <= bound; ++p)
        for (std::int64_t q = -bound; q <= bound; ++q)
            for (std::int64_t r = -bound; r <= bound; ++r)
                for (std::int64_t s = -bound; s <= bound; ++s) {
                    if (p * s - q * r != 1) continue;
                    // g^t diag(3,-2) g = diag(3,-2)
                    if (3 * p * p - 2 * r * r != 3 || 3 * p * q - 2 * r * s != 0 || 3 * q * q - 2 * s * s != -2) continue;
                    // c = (0, 1): B(g c, c) = -2 s.
                    if (!(-2 * s < 0)) continue;
                    out.insert({p, q, r, s});
                }
    return out;
}

TEST_CASE("automorph search matches brute force") {
    const QuadraticForm f = split({{{3, 0}, {0, -2}}});
    for (std::int64_t bound : {1, 6, 49}) {
        const auto expected = brute_automorphs(bound);
        std::set<std::array<std::int64_t, 4>> found;
        for (const Automorph& g : search_automorphs(f, bound))
            found.insert({g.gamma[0][0], g.gamma[0][1], g.gamma[1][0], g.gamma[1][1]});
        CHECK(found == expected);
    }
    CHECK(brute_automorphs(6).count({5, 4, 6, 5}) == 1);
    CHECK_THROWS(search_automorphs(f, 0));
}

TEST_CASE("automorph checks and action") {
    const QuadraticForm f = split({{{3, 0}, {0, -2}}});
    CHECK(check_automorph(f, {{{5, 4}, {6, 5}}}) == AutomorphStatus::Ok);
    CHECK(check_automorph(f, {{{1, 1}, {0, 1}}}) == AutomorphStatus::NotIsometry);
    CHECK(check_automorph(f, {{{-5, -4}, {-6, -5}}}) == AutomorphStatus::SwapsComponent);
    CHECK(check_automorph(f, {{{1, 0}, {0, -1}}}) == AutomorphStatus::DeterminantNotOne);
    const Automorph g = make_automorph(f, {{{5, 4}, {6, 5}}});
    CHECK(std::abs(g.shift) == doctest::Approx(std::acosh(5.0)).epsilon(1e-12));
    for (double t : {-1.0, 0.5}) {
        const RealVec lhs = act(g.gamma, c_of_t(f, t).c), rhs = c_of_t(f, act_on_t(f, g, t)).c;
        CHECK(lhs[0] == doctest::Approx(rhs[0]).epsilon(1e-10));
        CHECK(lhs[1] == doctest::Approx(rhs[1]).epsilon(1e-10));
    }
    CHECK_THROWS_AS(make_automorph(f, {{{1, 1}, {0, 1}}}), std::invalid_argument);
}

TEST_CASE("exact Q and B") {
    const QuadraticForm f = split({{{3, 0}, {0, -2}}});
    CHECK(eval_Q(f, {Rational(1, 6), Rational(0)}) == Rational(1, 24));
    CHECK(eval_B(f, {Rational(1, 6), Rational(0)}, {Rational(1, 6), Rational(1, 4)}) == Rational(1, 12));
}

}  // TEST_SUITE
