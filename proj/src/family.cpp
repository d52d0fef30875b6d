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

#include "maass/family.hpp"

#include <cmath>
#include <numeric>

#include "maass/cohen.hpp"
#include "maass/parallel.hpp"

namespace maass {

namespace {

IntMat2 parse_mat(const nlohmann::json& j, const char* what) {
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument(std::string(what) + " must be a 2x2 integer matrix");
    IntMat2 m{};
    for (std::size_t r = 0; r < 2; ++r) {
        if (!j[r].is_array() || j[r].size() != 2) throw std::invalid_argument(std::string(what) + " must be a 2x2 integer matrix");
        for (std::size_t c = 0; c < 2; ++c) {
            if (!j[r][c].is_number_integer()) throw std::invalid_argument(std::string(what) + " entries must be integers");
            m[r][c] = j[r][c].get<std::int64_t>();
        }
    }
    return m;
}

nlohmann::json mat_json(const IntMat2& m) { return {{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}; }

double t_of(const QuadraticForm& form, const IntMat2& g, double t) {
    return act_on_t(form, make_automorph(form, g), t);
}

}  // namespace

bool check_family_condition(const FamilySpec& spec) {
    if (spec.members.empty()) return true;
    std::int64_t l = 1;
    double scale = 0.0;
    for (const auto& m : spec.members) {
        l = std::lcm(l, m.weight.period());
        scale = std::max(scale, m.weight.max_abs());
    }
    PeriodicWeight total(l);
    for (const auto& m : spec.members) {
        total += m.weight;
        total -= m.weight.compose(m.gamma);
    }
    return total.max_abs() <= 1e-12 * std::max(1.0, scale);
}

void validate_family(const FamilySpec& spec) {
    if (spec.members.empty()) throw FamilyError("family has no members", -1);
    c_of_t(spec.form, spec.c_t);
    for (std::size_t j = 0; j < spec.members.size(); ++j) {
        const auto& m = spec.members[j];
        const AutomorphStatus st = check_automorph(spec.form, m.gamma);
        if (st != AutomorphStatus::Ok)
            throw FamilyError("member " + std::to_string(j) + ": gamma is not an automorph (" + to_string(st) + ")",
                              static_cast<int>(j));
        for (const IntVec& r : m.weight.support())
            if (eval_Q(spec.form, {Rational(r[0]), Rational(r[1])}) == 0)
                throw FamilyError("member " + std::to_string(j) + ": Q vanishes at support residue (" +
                                      std::to_string(r[0]) + ", " + std::to_string(r[1]) + ")",
                                  static_cast<int>(j));
    }
    if (!check_family_condition(spec))
        throw FamilyError("cancellation condition sum_j (m_j - m_j o gamma_j) = 0 fails", -1);
}

EvalResult family_sum(const FamilySpec& spec, Complex tau, double eps, const EvalWindow& window) {
    validate_family(spec);
    const double share = eps / static_cast<double>(spec.members.size());
    EvalResult out;
    parallel::ComplexCompensatedSum acc;
    for (const auto& m : spec.members) {
        const double t2 = t_of(spec.form, m.gamma, spec.c_t);
        const EvalResult r = phi_m(spec.form, m.weight, spec.c_t, t2, tau, share, window);
        acc.add(r.value);
        out.truncation_radius = std::max(out.truncation_radius, r.truncation_radius);
        out.tail_bound += r.tail_bound;
        out.terms_summed += r.terms_summed;
    }
    out.value = acc.value();
    return out;
}

EvalResult family_sum_hat(const FamilySpec& spec, Complex tau, double eps) {
    validate_family(spec);
    const double share = eps / static_cast<double>(spec.members.size());
    EvalResult out;
    parallel::ComplexCompensatedSum acc;
    for (const auto& m : spec.members) {
        const double t2 = t_of(spec.form, m.gamma, spec.c_t);
        const EvalResult r = phi_hat_m(spec.form, m.weight, spec.c_t, t2, tau, share);
        acc.add(r.value);
        out.truncation_radius = std::max(out.truncation_radius, r.truncation_radius);
        out.tail_bound += r.tail_bound;
        out.terms_summed += r.terms_summed;
    }
    out.value = acc.value();
    return out;
}

double verify_c_independence(const FamilySpec& spec, double t_a, double t_b, Complex tau, double eps) {
    FamilySpec a = spec, b = spec;
    a.c_t = t_a;
    b.c_t = t_b;
    return std::abs(family_sum(a, tau, eps).value - family_sum(b, tau, eps).value);
}

FamilySpec cohen_family() {
    FamilySpec spec;
    spec.form = split({{{1, 0}, {0, -24}}});
    PeriodicWeight m(12);
    for (std::int64_t i = 0; i < 12; ++i)
        for (std::int64_t j = 0; j < 12; ++j) {
            // e(mu_1/12 - mu_2/2) = e((mu_1 - 6 mu_2)/12)
            if (i % 6 == 1) m.set(i, j, 0.5 * unit_phase(i - 6 * j, 12));
            if (i % 6 == 5) m.set(i, j, 0.5 * unit_phase(-(i - 6 * j), 12));
        }
    spec.members.push_back({m, {{{5, 24}, {1, 5}}}});
    // c = diag(6,1) c1 / sqrt(12), the image of c1 = (-2,3)/sqrt(3).
    const double s3 = std::sqrt(3.0), s12 = std::sqrt(12.0);
    spec.c_t = t_of_c(spec.form, {6.0 * (-2.0 / s3) / s12, (3.0 / s3) / s12});
    return spec;
}

FamilySpec synthetic_family() {
    FamilySpec spec;
    spec.form = split({{{3, 0}, {0, -2}}});
    PeriodicWeight m0(4);
    for (std::int64_t i = 0; i < 4; ++i)
        for (std::int64_t j = 0; j < 4; ++j) {
            if (i == 0 && j == 0) continue;
            m0.set(i, j, Complex(1.0 + static_cast<double>((3 * i + j) % 5), static_cast<double>((i * j) % 3) - 1.0));
        }
    // gamma has finite order on (Z/4)^2; summing m0 over the orbit makes m o gamma = m.
    const IntMat2 g{{{5, 4}, {6, 5}}};
    PeriodicWeight m = m0;
    IntMat2 power = g;
    while (power[0][0] % 4 != 1 || power[1][1] % 4 != 1 || power[0][1] % 4 != 0 || power[1][0] % 4 != 0) {
        m += m0.compose(power);
        power = multiply(power, g);
        for (auto& r : power)
            for (auto& e : r) e %= 4;
    }
    spec.members.push_back({m, g});
    spec.c_t = 0.3;
    return spec;
}

FamilySpec parse_family_spec(const nlohmann::json& j) {
    if (!j.is_object()) throw std::invalid_argument("family spec must be a JSON object");
    for (const char* key : {"A", "c_t", "members"})
        if (!j.contains(key)) throw std::invalid_argument(std::string("family spec lacks field '") + key + "'");
    FamilySpec spec;
    spec.form = split(parse_mat(j["A"], "A"));
    if (!j["c_t"].is_number()) throw std::invalid_argument("c_t must be a number");
    spec.c_t = j["c_t"].get<double>();
    if (!j["members"].is_array()) throw std::invalid_argument("members must be an array");
    for (const auto& mj : j["members"]) {
        if (!mj.is_object() || !mj.contains("L") || !mj.contains("table") || !mj.contains("gamma"))
            throw std::invalid_argument("member needs fields L, table, gamma");
        if (!mj["L"].is_number_integer()) throw std::invalid_argument("L must be an integer");
        PeriodicWeight w(mj["L"].get<std::int64_t>());
        if (!mj["table"].is_array()) throw std::invalid_argument("table must be an array");
        for (const auto& e : mj["table"]) {
            if (!e.is_array() || e.size() != 4 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
                !e[2].is_number() || !e[3].is_number())
                throw std::invalid_argument("table entries must be [i, j, re, im]");
            w.set(e[0].get<std::int64_t>(), e[1].get<std::int64_t>(), {e[2].get<double>(), e[3].get<double>()});
        }
        spec.members.push_back({w, parse_mat(mj["gamma"], "gamma")});
    }
    return spec;
}

nlohmann::json to_json(const FamilySpec& spec) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& m : spec.members) {
        nlohmann::json table = nlohmann::json::array();
        for (const IntVec& r : m.weight.support()) {
            const Complex v = m.weight.at(r);
            table.push_back({r[0], r[1], v.real(), v.imag()});
        }
        members.push_back({{"L", m.weight.period()}, {"table", table}, {"gamma", mat_json(m.gamma)}});
    }
    return {{"A", mat_json(spec.form.matrix())}, {"c_t", spec.c_t}, {"members", members}};
}

}  // namespace maass
