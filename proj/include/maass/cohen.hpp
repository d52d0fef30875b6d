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

// Cohen's example: A = diag(3,-2), c1 = (-2,3)/sqrt(3), c2 = (2,3)/sqrt(3) = gamma c1
// with gamma = (5,4;6,5), and
//
//   PhiHat_{(1/6,0),(1/6,1/4)} = Phi_{(1/6,0),(1/6,1/4)} = zeta_12 phi_0,
//   phi_0(tau) = y^{1/2} sum_{n != 0} T(n) e(n x / 24) K_0(2 pi |n| y / 24).
//
// Also the vector-valued transformation law of (PhiHat_1, sqrt2 PhiHat_2,
// sqrt2 PhiHat_3) and the Gamma_0(2) multiplier of its first component.

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "maass/theta.hpp"

namespace maass {

struct CohenExample {
    QuadraticForm form;
    double t1 = 0.0;
    double t2 = 0.0;
    IntMat2 gamma{};
    /// Characteristics (a, b) of the three vector components.
    std::array<std::pair<RationalVec, RationalVec>, 3> components;

    ThetaParams params(int component = 0) const;
};

const CohenExample& cohen_example();

inline Complex zeta(int n, int k = 1) { return unit_phase(k, n); }

struct Phi0Result {
    Complex value{};
    /// Largest |n| summed.
    std::int64_t max_index = 0;
    double tail_bound = 0.0;
};

/// The T(n) series is cut where the tail, majorized with |T(n)| <= |n| and
/// K_0(x) <= sqrt(pi/(2x)) e^{-x}, drops below eps. The majorant is checked on
/// every coefficient used (std::logic_error if violated).
Phi0Result cohen_phi0(Complex tau, double eps, const EvalWindow& window = {});

enum class CohenSide { Phi, PhiHat };

/// max over tau of |F(tau) - phase * phi_0(tau)| with F = Phi or PhiHat of the first
/// component. phase defaults to zeta_12 (other values exercise the harness).
double verify_cohen_identity(const std::vector<Complex>& taus, double eps, CohenSide side = CohenSide::Phi,
                             Complex phase = zeta(12));

using Vec3 = std::array<Complex, 3>;
Vec3 vector_phi_hat(Complex tau, double eps);

/// max_i |PhiHat(tau+1) - M_T PhiHat(tau)|_i with M_T = (z24,0,0; 0,0,z48^5; 0,z48^-7,0).
double verify_vector_T(Complex tau, double eps);
/// max_i |PhiHat(-1/tau) - M_S PhiHat(tau)|_i with M_S = (0,1,0; 1,0,0; 0,0,1).
double verify_vector_S(Complex tau, double eps);

// ---- Gamma_0(2) -----------------------------------------------------------------

enum class Letter { T, TInv, L, LInv, MinusI };
char to_char(Letter l);

struct MultiplierWord {
    IntMat2 gamma{};
    std::vector<Letter> word;

    IntMat2 product() const;
    /// (#T - #T^-1) + (#L - #L^-1), reduced mod 24 into [0, 24).
    int exponent() const;
    Complex multiplier() const { return zeta(24, exponent()); }
    std::string to_string() const;
};

IntMat2 letter_matrix(Letter l);
IntMat2 word_product(const std::vector<Letter>& word);

/// Euclidean descent with T = (1,1;0,1) and L = (1,0;2,1): left multiplication by
/// T^k reduces a mod c and by L^k reduces c mod 2a until c = 0, leaving +-T^n.
/// Throws std::invalid_argument unless det = 1 and c is even.
MultiplierWord gamma02_decompose(const IntMat2& gamma);

Complex mobius(const IntMat2& g, Complex tau);

/// |PhiHat_1(gamma tau) - v(gamma) PhiHat_1(tau)|.
double verify_multiplier(const IntMat2& gamma, Complex tau, double eps);

/// |(Delta_0 - 1/4) f(tau)| by the 5-point stencil.
double verify_eigenfunction(const std::function<Complex(Complex)>& f, Complex tau, double h);

}  // namespace maass
