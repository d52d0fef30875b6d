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

#include <limits>

#include "maass/quadform.hpp"

namespace maass {

struct Tolerance {
    double eps_abs = 1e-12;
    double eps_rel = 1e-12;
};

/// Throws std::invalid_argument unless both parts are positive and eps_abs >= 1e-14.
Tolerance make_tolerance(double eps_abs, double eps_rel);

struct K0Value {
    double value = 0.0;
    bool underflow = false;
};

/// Modified Bessel function K_0 for x > 0. Ascending series with the logarithmic
/// term for x <= 2, Steed's continued fraction (CF2) above. For x > 745 the
/// result underflows and is returned as exact 0 with the flag set.
K0Value bessel_k0_checked(double x);
inline double bessel_k0(double x) { return bessel_k0_checked(x).value; }

/// Sign of x, with |x| <= 1e-13 * scale treated as 0.
int sign_tol(double x, double scale);

/// Sign of B(nu, c) with a zero band relative to the sizes of A nu and c.
int sign_of_pairing(const QuadraticForm& form, const RealVec& nu, const RealVec& c);

/// int_{t1}^{t2} exp(-pi y B(nu, c(t))^2) dt. Oriented: swapping the ends negates.
double gauss_segment_integral(const QuadraticForm& form, const RealVec& nu, double t1, double t2, double y,
                              const Tolerance& tol);

/// int_lo^hi exp(-pi y (u e^{-2t} + v e^{2t})) dt with u, v >= 0, y > 0. lo may be
/// -infinity (needs u > 0) and hi +infinity (needs v > 0). With u = (P nu)_1^2 and
/// v = (P nu)_2^2 this is the q^{Q(nu)}-damped Gaussian segment integral
/// e^{-2 pi y Q(nu)} int e^{-pi y B(nu, c(t))^2} dt, which never overflows.
double damped_segment_integral(double u, double v, double y, double lo, double hi, double abs_tol);

/// The boundary integral alpha_{t0}(nu): int_{t0}^inf if B(nu,c0)B(nu,c0perp) > 0,
/// -int_{-inf}^{t0} if < 0, 0 on the boundary. Semi-infinite ranges are cut where
/// the Gaussian tail bound e^{-pi(B0^2 + (B0^2 + B0perp^2) s^2)} integrates to
/// below eps_abs / 10. Throws std::domain_error when Q(nu) = 0.
double alpha(const QuadraticForm& form, double t0, const RealVec& nu, const Tolerance& tol);

/// e^{-pi B0^2} / (2 sqrt(B0^2 + B0perp^2)), the magnitude bound for alpha_{t0}(nu).
double alpha_bound(const QuadraticForm& form, double t0, const RealVec& nu);

struct SegmentDecomposition {
    double alpha1 = 0.0;
    double alpha2 = 0.0;
    /// sgn(t2-t1) (1/2[1-sgn(B1 B2)] + 1/2[1-sgn(B1p B2p)]) e^{2 pi Q} K0(2 pi |Q|)
    double indicator = 0.0;
    double value() const { return alpha1 - alpha2 + indicator; }
};

/// Splits the segment integral (y = 1) into boundary integrals and the
/// sign-indicator K0 term. Self-test only. Throws std::domain_error when Q(nu) = 0.
SegmentDecomposition lemma_segment_decomposition(const QuadraticForm& form, const RealVec& nu, double t1, double t2,
                                                 const Tolerance& tol);

/// e^{2 pi Q} K0(2 pi |Q|), the full-line value of the segment integral at y = 1.
double full_line_integral(double q);

}  // namespace maass
