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

#include "maass/cohen.hpp"
#include "maass/family.hpp"
#include "maass/qseries.hpp"
#include "oracles.hpp"

using namespace maass;

TEST_SUITE("maass") {

TEST_CASE("phi0 against a direct T(n) K0 sum") {
    // Direct sum with the long-double K0 oracle over |n| <= 2400.
    const TCoefficients t = t_coefficients(2401);
    for (const Complex tau : {Complex(0, 1), Complex(0.4, 1.5)}) {
        std::complex<oracle::ld> s = 0;
        for (const auto& [n, v] : t.table) {
            const oracle::ld arg = 2 * oracle::kPi * std::abs(n) * tau.imag() / 24;
            if (arg > 500) continue;
            s += oracle::phase(oracle::ld(n) * tau.real() / 24) * oracle::ld(v.get_si()) * oracle::k0(arg);
        }
        s *= std::sqrt(oracle::ld(tau.imag()));
        const Phi0Result r = cohen_phi0(tau, 1e-12);
        CHECK(std::abs(r.value - Complex(double(s.real()), double(s.imag()))) < 1e-11);
        CHECK(r.tail_bound <= 1e-12);
    }
}

TEST_CASE("phi0 symmetries") {
    const Complex a = cohen_phi0({0.3, 1.0}, 1e-12).value;
    CHECK(std::abs(cohen_phi0({24.3, 1.0}, 1e-12).value - a) < 1e-11);
    CHECK(std::abs(cohen_phi0({-0.3, 1.0}, 1e-12).value - std::conj(a)) < 1e-11);
}

TEST_CASE("Cohen identification") {
    CHECK(verify_cohen_identity({{0, 1}, {1, 1}, {0, 2}}, 1e-10) <= 4e-8);
    CHECK(verify_cohen_identity({{0, 1}}, 1e-10, CohenSide::PhiHat) <= 4e-8);
    // The wrong root of unity must fail: the harness can tell.
    CHECK(verify_cohen_identity({{0, 1}}, 1e-10, CohenSide::Phi, zeta(12, -1)) > 0.1);
}

TEST_CASE("example parameters") {
    const CohenExample& ex = cohen_example();
    const double s3 = std::sqrt(3.0);
    const RealVec c1 = c_of_t(ex.form, ex.t1).c, c2 = c_of_t(ex.form, ex.t2).c;
    CHECK(c1[0] == doctest::Approx(-2 / s3));
    CHECK(c1[1] == doctest::Approx(3 / s3));
    CHECK(c2[0] == doctest::Approx(2 / s3));
    CHECK(c2[1] == doctest::Approx(3 / s3));
    CHECK(is_automorph(ex.form, ex.gamma));
}

TEST_CASE("vector transformation laws") {
    CHECK(verify_vector_T({0, 1}, 1e-9) <= 6e-9);
    CHECK(verify_vector_S({0, 1}, 1e-9) <= 6e-9);
    CHECK(verify_vector_S({0.2, 1.4}, 1e-9) <= 6e-9);
}

TEST_CASE("Gamma0(2) descent") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> letter(0, 4), len(0, 15);
    for (int k = 0; k < 200; ++k) {
        std::vector<Letter> w;
        for (int i = len(rng); i > 0; --i) w.push_back(static_cast<Letter>(letter(rng)));
        const IntMat2 g = word_product(w);
        const MultiplierWord found = gamma02_decompose(g);
        CHECK(found.product() == g);
        CHECK(found.exponent() == MultiplierWord{g, w}.exponent());
    }
    CHECK_THROWS_AS(gamma02_decompose({{{0, -1}, {1, 0}}}), std::invalid_argument);  // S is not in Gamma0(2)
    CHECK_THROWS_AS(gamma02_decompose({{{2, 1}, {2, 1}}}), std::invalid_argument);
    CHECK(gamma02_decompose({{{5, 4}, {6, 5}}}).product() == IntMat2{{{5, 4}, {6, 5}}});
    // (L T^-1)^2 = -I.
    CHECK(word_product({Letter::L, Letter::TInv, Letter::L, Letter::TInv}) == IntMat2{{{-1, 0}, {0, -1}}});
}

TEST_CASE("multiplier system") {
    for (const IntMat2 g : {IntMat2{{{1, 1}, {0, 1}}}, IntMat2{{{1, 0}, {2, 1}}}, IntMat2{{{5, 4}, {6, 5}}},
                            IntMat2{{{3, 1}, {2, 1}}}}) {
        CHECK(verify_multiplier(g, {0, 1}, 1e-9) <= 4e-9);
    }
}

TEST_CASE("eigenfunction") {
    const double h = 1e-3;
    const Complex tau(0, 1);
    const EvalWindow w{tau.imag() - h, tau.imag() + h};
    CHECK(verify_eigenfunction([&](Complex z) { return cohen_phi0(z, 1e-12, w).value; }, tau, h) <= 1e-5);
    // A non-eigenfunction is caught: y^2 has (Delta - 1/4) y^2 = -9/4 y^2.
    CHECK(verify_eigenfunction([](Complex z) { return Complex(z.imag() * z.imag(), 0); }, tau, h) ==
          doctest::Approx(2.25).epsilon(1e-4));
}

TEST_CASE("Cohen family") {
    const FamilySpec f = cohen_family();
    CHECK(check_family_condition(f));
    CHECK_NOTHROW(validate_family(f));
    const Complex tau(0, 1);
    CHECK(verify_c_independence(f, 0.0, 0.7, tau, 1e-9) <= 4e-9);
    // Re-indexing: the L = 12 weight on Z^2 reproduces the coset evaluation.
    const CohenExample& ex = cohen_example();
    const Complex lattice = phi(ex.params(0), 12.0 * tau, 1e-11).value / std::sqrt(12.0);
    CHECK(std::abs(family_sum(f, tau, 1e-11).value - lattice) < 1e-10);
    CHECK(std::abs(family_sum_hat(f, tau, 1e-11).value - family_sum(f, tau, 1e-11).value) < 1e-10);
}

TEST_CASE("synthetic family") {
    const FamilySpec f = synthetic_family();
    CHECK(check_family_condition(f));
    CHECK_NOTHROW(validate_family(f));
    const Complex tau(0.2, 1.1);
    CHECK(verify_c_independence(f, f.c_t, f.c_t + 0.7, tau, 1e-9) <= 4e-9);
    CHECK(std::abs(family_sum(f, tau, 1e-10).value) > 1e-3);
    const double h = 1e-3;
    const EvalWindow w{tau.imag() - h, tau.imag() + h};
    CHECK(verify_eigenfunction([&](Complex z) { return family_sum(f, z, 1e-12, w).value; }, tau, h) <= 1e-5);
}

TEST_CASE("family spec errors") {
    FamilySpec f = synthetic_family();
    f.members[0].weight.set(1, 1, f.members[0].weight.at(1, 1) + Complex(1, 0));
    CHECK_FALSE(check_family_condition(f));
    CHECK_THROWS_AS(validate_family(f), FamilyError);
    FamilySpec g = synthetic_family();
    g.members[0].gamma = {{{1, 1}, {0, 1}}};
    try {
        validate_family(g);
        FAIL("expected FamilyError");
    } catch (const FamilyError& e) {
        CHECK(e.member() == 0);
    }
    FamilySpec z = synthetic_family();
    z.members[0].weight.set(0, 0, {1, 0});  // Q(0) = 0 in the support
    CHECK_THROWS_AS(validate_family(z), FamilyError);
}

TEST_CASE("family JSON round trip") {
    const FamilySpec f = synthetic_family();
    const FamilySpec g = parse_family_spec(to_json(f));
    CHECK(to_json(g) == to_json(f));
    CHECK_THROWS_AS(parse_family_spec(nlohmann::json::parse(R"({"A": [[1,0],[0,-1]]})")), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_spec(nlohmann::json::parse(R"({"A": 3, "c_t": 0, "members": []})")),
                    std::invalid_argument);
}

}  // TEST_SUITE
