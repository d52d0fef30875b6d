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

// Lattice-sum evaluators for the indefinite theta functions attached to a
// signature (1,1) form. For tau = x + iy and nu running over a + Z^2:
//
//   PhiHat  y^{1/2} sum q^{Q(nu)} e(B(nu,b)) int_{t1}^{t2} e^{-pi y B(nu,c(t))^2} dt
//   Phi     sgn(t2-t1) y^{1/2} sum e(Q(nu)x + B(nu,b)) *
//             ( w(c1,c2) K0(2 pi Q y) + w(c1perp,c2perp) K0(-2 pi Q y) ),
//           w(u,v) = 1/2 [1 - sgn(B(nu,u) B(nu,v))]
//   PhiLower y^{1/2} sum alpha_{t0}(nu y^{1/2}) q^{Q(nu)} e(B(nu,b))
//   ThetaC  y^{3/2} sum B(nu,c) B(nu,cperp) e^{pi i tau B(nu,cperp)^2 / 2 - pi i conj(tau) B(nu,c)^2 / 2} e(B(nu,b))
//
// The periodic-weight variants replace a + Z^2 and e(B(nu,b)) by Z^2 and m(nu).
//
// Every evaluator returns a value within eps of the exact sum: half the budget
// goes to the truncation tail (bounded through positive-definite minorants of
// the exponent, see truncation_radius) and half to the per-term integrals.

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "maass/quadform.hpp"
#include "maass/rational.hpp"

namespace maass {

using Complex = std::complex<double>;

struct ThetaParams {
    QuadraticForm form;
    RationalVec a{};
    RationalVec b{};
    double t1 = 0.0;
    double t2 = 0.0;
};

ThetaParams with_characteristics(const ThetaParams& p, const RationalVec& a, const RationalVec& b);

/// A function on Z^2 with period L in both coordinates.
class PeriodicWeight {
public:
    explicit PeriodicWeight(std::int64_t period);
    PeriodicWeight(std::int64_t period, std::vector<Complex> table);

    std::int64_t period() const { return period_; }
    Complex at(std::int64_t i, std::int64_t j) const { return table_[index(i, j)]; }
    Complex at(const IntVec& v) const { return at(v[0], v[1]); }
    void set(std::int64_t i, std::int64_t j, Complex value) { table_[index(i, j)] = value; }
    const std::vector<Complex>& table() const { return table_; }

    /// (m o g)(nu) = m(g nu). Well defined mod L for g in GL2(Z).
    PeriodicWeight compose(const IntMat2& g) const;
    /// Re-expresses the weight with period a multiple of the current one.
    PeriodicWeight with_period(std::int64_t multiple) const;
    double max_abs() const;
    /// Residues (i, j) in [0, L)^2 with m != 0.
    std::vector<IntVec> support() const;

    PeriodicWeight& operator+=(const PeriodicWeight& other);
    PeriodicWeight& operator-=(const PeriodicWeight& other);
    PeriodicWeight& operator*=(Complex s);
    friend PeriodicWeight operator+(PeriodicWeight l, const PeriodicWeight& r) { return l += r; }
    friend PeriodicWeight operator-(PeriodicWeight l, const PeriodicWeight& r) { return l -= r; }
    friend PeriodicWeight operator*(Complex s, PeriodicWeight m) { return m *= s; }

private:
    std::size_t index(std::int64_t i, std::int64_t j) const;

    std::int64_t period_;
    std::vector<Complex> table_;
};

/// Lowest common period of two weights, both re-expressed on it.
std::int64_t common_period(const PeriodicWeight& l, const PeriodicWeight& r);

struct EvalResult {
    Complex value{};
    double truncation_radius = 0.0;
    /// Bound on |value - exact|: truncation tail plus the quadrature budget.
    double tail_bound = 0.0;
    std::int64_t terms_summed = 0;
};

enum class ThetaKind { PhiHat, Phi, PhiLower, ThetaC };

std::string to_string(ThetaKind kind);

/// Range of Im tau over which one truncation plan (radius and per-term
/// quadrature budget) must stay valid. Finite-difference stencils evaluate the
/// same finite sum at every node so that the truncation does not jump between
/// nodes. Default: just Im tau of the call.
struct EvalWindow {
    double y_lo = 0.0;
    double y_hi = 0.0;
};

/// Raised when Q vanishes at a lattice point that enters a K0 or alpha term.
class QZeroError : public std::domain_error {
public:
    QZeroError(const RationalVec& nu);
    const RationalVec& nu() const { return nu_; }

private:
    RationalVec nu_;
};

/// Radius R such that the terms with |nu| > R sum to less than eps in modulus.
/// PhiLower and ThetaC use params.t1 as the base point t0. Terms are majorized
/// by C(rho) e^{-beta rho^2} with beta from the least eigenvalue of a
/// positive-definite minorant of the exponent (rigorous over the whole range
/// [t1, t2] for PhiHat) and shells {k <= |nu| < k+1} of a + Z^2 hold at most
/// 16(k+1) points. Degenerate t1 = t2 gives 0 for PhiHat and Phi.
double truncation_radius(const ThetaParams& params, ThetaKind kind, double tau_y, double eps);

/// Truncation radius for a sum whose weights are bounded by weight_bound in modulus.
double truncation_radius(const QuadraticForm& form, double t1, double t2, ThetaKind kind, double tau_y, double eps,
                         double weight_bound);

EvalResult phi_hat(const ThetaParams& params, Complex tau, double eps, const EvalWindow& window = {});
EvalResult phi(const ThetaParams& params, Complex tau, double eps, const EvalWindow& window = {});
EvalResult phi_lower(const QuadraticForm& form, const RationalVec& a, const RationalVec& b, double t0, Complex tau,
                     double eps, const EvalWindow& window = {});
EvalResult theta_c(const QuadraticForm& form, const RationalVec& a, const RationalVec& b, double t0, Complex tau,
                   double eps, const EvalWindow& window = {});

EvalResult phi_m(const QuadraticForm& form, const PeriodicWeight& m, double t1, double t2, Complex tau, double eps,
                 const EvalWindow& window = {});
EvalResult phi_hat_m(const QuadraticForm& form, const PeriodicWeight& m, double t1, double t2, Complex tau,
                     double eps, const EvalWindow& window = {});
EvalResult phi_lower_m(const QuadraticForm& form, const PeriodicWeight& m, double t0, Complex tau, double eps,
                       const EvalWindow& window = {});

/// Q(nu) != 0 on all of a + Z^2, certified globally: when -det A is not a
/// square, Q is anisotropic over Q and vanishes on rational vectors only at 0,
/// so it suffices that a is not integral. Returns false when no certificate
/// applies; evaluation then still checks every summed point exactly.
bool q_nonzero_certified(const QuadraticForm& form, const RationalVec& a);

/// Discrete Fourier decomposition m(nu) = sum_l d_l e(B(nu, b_l)) with
/// b_l = A^{-1} k_l / L, k_l in (Z/L)^2. Zero coefficients are dropped.
struct CharacterTerm {
    Complex coefficient;
    RationalVec b;
};
std::vector<CharacterTerm> character_decomposition(const QuadraticForm& form, const PeriodicWeight& m);

/// Representatives of A^{-1} Z^2 / Z^2 in [0,1)^2; exactly |det A| of them.
std::vector<RationalVec> dual_coset_representatives(const QuadraticForm& form);

/// |PhiHat - Phi - phiLower^{c1} + phiLower^{c2}|.
double verify_split(const ThetaParams& params, Complex tau, double eps);

/// (Delta_0 - 1/4) PhiHat by the 5-point stencil of step h, compared against
/// (pi/2)(theta^{c2} - theta^{c1}). Needs h in [1e-4, 1e-2] and Im tau > h.
double verify_laplacian_defect(const ThetaParams& params, Complex tau, double eps, double h);

/// Phase e(-Q(a) - B(A^{-1}A*, a)/2) and shifted b = a + b + A^{-1}A*/2 of the tau -> tau+1 law.
struct TLawData {
    Rational phase;  // exponent, reduced mod 1
    RationalVec b;
};
TLawData t_law_data(const QuadraticForm& form, const RationalVec& a, const RationalVec& b);

double verify_transform_T(const ThetaParams& params, Complex tau, double eps);
double verify_transform_S(const ThetaParams& params, Complex tau, double eps);

/// Laplacian Delta_0 = -y^2 (d_xx + d_yy) of f at tau by the 5-point stencil.
template <typename F>
Complex stencil_laplacian(const F& f, Complex tau, double h) {
    const double x = tau.real(), y = tau.imag();
    if (!(y > h)) throw std::domain_error("stencil leaves the upper half plane");
    const Complex c = f(tau);
    const Complex fxx = (f(Complex(x + h, y)) - 2.0 * c + f(Complex(x - h, y))) / (h * h);
    const Complex fyy = (f(Complex(x, y + h)) - 2.0 * c + f(Complex(x, y - h))) / (h * h);
    return -y * y * (fxx + fyy);
}

}  // namespace maass
