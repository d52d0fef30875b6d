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

// Families of Maass waveforms sum_j Phi_{m_j}^{c, gamma_j c} built from periodic
// weights m_j and automorphs gamma_j with sum_j (m_j - m_j o gamma_j) = 0.

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "maass/theta.hpp"

namespace maass {

struct FamilyMember {
    PeriodicWeight weight{1};
    IntMat2 gamma = kIdentity;
};

struct FamilySpec {
    QuadraticForm form;
    double c_t = 0.0;
    std::vector<FamilyMember> members;
};

class FamilyError : public std::invalid_argument {
public:
    FamilyError(const std::string& what, int member) : std::invalid_argument(what), member_(member) {}
    /// Index of the offending member, -1 when the whole spec is at fault.
    int member() const { return member_; }

private:
    int member_;
};

/// sum_j (m_j - m_j o gamma_j) == 0 on (Z/L')^2, L' = lcm of the periods. Exact up
/// to the table entries themselves (compared with tolerance 1e-12 relative).
bool check_family_condition(const FamilySpec& spec);

/// Every automorph valid, Q != 0 on every support residue, the cancellation
/// condition. Throws FamilyError naming the failing member.
void validate_family(const FamilySpec& spec);

/// sum_j Phi_{m_j}^{c, gamma_j c}(tau), c = c(spec.c_t); each term gets eps / #members.
EvalResult family_sum(const FamilySpec& spec, Complex tau, double eps, const EvalWindow& window = {});
/// The same with PhiHat_{m_j}; equals family_sum for valid specs.
EvalResult family_sum_hat(const FamilySpec& spec, Complex tau, double eps);

/// |family_sum at c(t_a) - family_sum at c(t_b)|.
double verify_c_independence(const FamilySpec& spec, double t_a, double t_b, Complex tau, double eps);

/// Cohen's example as a family on Z^2: with mu = (6 nu_1, nu_2), nu in (1/6,0)+Z^2
/// becomes mu_1 = 1 mod 6 for the form A' = diag(1,-24), Q_A(nu) = Q_{A'}(mu)/12,
/// and gamma = (5,4;6,5) becomes gamma' = (5,24;1,5). The character e(B(nu,b)),
/// b = (1/6,1/4), reads e(mu_1/12 - mu_2/2). Symmetrizing over a -> -a (PhiHat and
/// Phi are even in (a,b)) gives the L = 12 weight
///   m(mu) = 1/2 e( (mu_1/12 - mu_2/2)) for mu_1 = 1 mod 6,
///           1/2 e(-(mu_1/12 - mu_2/2)) for mu_1 = 5 mod 6, 0 otherwise,
/// which satisfies m o gamma' = m, so the single member (m, gamma') is a family.
/// Rescaling tau: family_sum(tau) = Phi_{(1/6,0),(1/6,1/4)}(12 tau) / sqrt(12).
FamilySpec cohen_family();

/// A one-member family on A = diag(3,-2), gamma = (5,4;6,5): a period-4 weight
/// vanishing on 0 mod 4, summed over its gamma-orbit so that m o gamma = m.
FamilySpec synthetic_family();

/// JSON: {"A": [[a11,a12],[a12,a22]], "c_t": t, "members": [{"L": L,
/// "table": [[i, j, re, im], ...], "gamma": [[g11,g12],[g21,g22]]}, ...]}.
/// Throws std::invalid_argument on malformed input.
FamilySpec parse_family_spec(const nlohmann::json& j);
nlohmann::json to_json(const FamilySpec& spec);

}  // namespace maass
