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

// Binary quadratic forms of signature (1,1): Q(v) = v^t A v / 2 with A integer
// symmetric and det A < 0. The form is stored together with a real splitting
// map P (A = P^t S P, S = antidiag(1,1)) that fixes the parametrization
//
//   c(t)     = P^{-1} ( e^t, -e^{-t})
//   c_perp(t)= P^{-1} ( e^t,  e^{-t})
//
// of the component C_Q of {Q = -1} that contains P^{-1}(1,-1).

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "maass/rational.hpp"

namespace maass {

using IntMat2 = std::array<std::array<std::int64_t, 2>, 2>;
using RealMat2 = std::array<std::array<double, 2>, 2>;

inline constexpr double kMaxGeodesicParam = 50.0;
inline constexpr std::int64_t kMaxFormEntry = 1000000;
inline constexpr std::int64_t kMaxAutomorphBound = 10000;

class QuadraticForm {
public:
    const IntMat2& matrix() const { return a_; }
    std::int64_t det() const { return a_[0][0] * a_[1][1] - a_[0][1] * a_[1][0]; }
    /// Diagonal of A.
    IntVec astar() const { return {a_[0][0], a_[1][1]}; }
    const RealMat2& splitting() const { return p_; }
    const RealMat2& splitting_inverse() const { return p_inv_; }
    /// c(0) = P^{-1}(1,-1); the representative of C_Q.
    RealVec reference() const { return c_ref_; }

    /// (P v)_1, (P v)_2; Q(v) = (Pv)_1 (Pv)_2.
    RealVec split_coords(const RealVec& v) const;
    RealVec apply(const RealVec& v) const;  // A v

    double q(const RealVec& v) const;
    double b(const RealVec& v, const RealVec& w) const;

    friend QuadraticForm split(const IntMat2& a, double gauge_shift);

private:
    IntMat2 a_{};
    RealMat2 p_{};
    RealMat2 p_inv_{};
    RealVec c_ref_{};
};

struct GeodesicPoint {
    double t = 0.0;
    RealVec c{};
    RealVec cperp{};
};

/// Q(v) = v^t A v / 2, exact.
Rational eval_Q(const QuadraticForm& form, const RationalVec& v);
/// B(v, w) = v^t A w, exact.
Rational eval_B(const QuadraticForm& form, const RationalVec& v, const RationalVec& w);

/// Builds the splitting map for A in the canonical gauge, optionally shifted by
/// diag(e^r, e^{-r}). A shift by r reparametrizes c(t) -> c(t - r).
///
/// Canonical gauge: Q = L1 * L2 with linear forms from the roots of the binary
/// form. When A11 != 0 both factors have nu_1 coefficient sqrt(|A11|/2) up to the
/// sign of A11 (L1 positive), with L1 built from the smaller root. When A11 = 0
/// the factors are (A12 nu_1 + A22 nu_2 / 2) / sqrt|A12| and sqrt|A12| nu_2.
///
/// Throws std::invalid_argument unless A is symmetric with det A < 0.
QuadraticForm split(const IntMat2& a, double gauge_shift = 0.0);

/// |t| <= 50, otherwise std::domain_error.
GeodesicPoint c_of_t(const QuadraticForm& form, double t);

/// Inverse of c_of_t. Throws std::domain_error if Q(c) differs from -1 by more
/// than 1e-9 or if c lies in -C_Q.
double t_of_c(const QuadraticForm& form, const RealVec& c);

enum class AutomorphStatus { Ok, NotIsometry, DeterminantNotOne, SwapsComponent };

std::string to_string(AutomorphStatus s);

/// All four conditions: gamma^t A gamma = A and det gamma = 1 (exact), and
/// B(gamma c_ref, c_ref) < 0.
AutomorphStatus check_automorph(const QuadraticForm& form, const IntMat2& gamma);
inline bool is_automorph(const QuadraticForm& form, const IntMat2& gamma) {
    return check_automorph(form, gamma) == AutomorphStatus::Ok;
}

struct Automorph {
    IntMat2 gamma{};
    /// Translation t -> t + shift induced on C_Q.
    double shift = 0.0;
};

/// Validates gamma and records its t-shift. Throws std::invalid_argument with the
/// failing condition.
Automorph make_automorph(const QuadraticForm& form, const IntMat2& gamma);

/// t' with c(t') = gamma c(t).
double act_on_t(const QuadraticForm& form, const Automorph& gamma, double t);

/// Every automorph with max |entry| <= bound, sorted by shift. 1 <= bound <= 10^4.
std::vector<Automorph> search_automorphs(const QuadraticForm& form, std::int64_t bound);

IntMat2 multiply(const IntMat2& x, const IntMat2& y);
IntMat2 inverse_sl2(const IntMat2& g);
IntVec act(const IntMat2& g, const IntVec& v);
RealVec act(const IntMat2& g, const RealVec& v);
inline constexpr IntMat2 kIdentity{{{1, 0}, {0, 1}}};

}  // namespace maass
