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

#include "maass/quadform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace maass {

namespace {

using i128 = __int128;

RealMat2 invert(const RealMat2& m) {
    const double d = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    return {{{m[1][1] / d, -m[0][1] / d}, {-m[1][0] / d, m[0][0] / d}}};
}

RealVec mul(const RealMat2& m, const RealVec& v) {
    return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

// Integer solutions x in [-bound, bound] of c2 x^2 + c1 x + c0 = 0.
std::vector<std::int64_t> integer_roots(i128 c2, i128 c1, i128 c0, std::int64_t bound) {
    std::vector<std::int64_t> out;
    auto push = [&](i128 x) {
        if (x >= -bound && x <= bound) out.push_back(static_cast<std::int64_t>(x));
    };
    if (c2 == 0) {
        if (c1 == 0) {
            if (c0 == 0)
                for (std::int64_t x = -bound; x <= bound; ++x) out.push_back(x);
            return out;
        }
        if (c0 % c1 == 0) push(-c0 / c1);
        return out;
    }
    const i128 disc = c1 * c1 - 4 * c2 * c0;
    if (disc < 0) return out;
    auto s = static_cast<i128>(std::sqrt(static_cast<long double>(disc)));
    while (s * s > disc) --s;
    while ((s + 1) * (s + 1) <= disc) ++s;
    if (s * s != disc) return out;
    for (i128 num : {-c1 - s, -c1 + s}) {
        if (num % (2 * c2) == 0) push(num / (2 * c2));
        if (s == 0) break;
    }
    return out;
}

}  // namespace

RealVec QuadraticForm::split_coords(const RealVec& v) const { return mul(p_, v); }

RealVec QuadraticForm::apply(const RealVec& v) const {
    return {a_[0][0] * v[0] + a_[0][1] * v[1], a_[1][0] * v[0] + a_[1][1] * v[1]};
}

double QuadraticForm::q(const RealVec& v) const { return 0.5 * b(v, v); }

double QuadraticForm::b(const RealVec& v, const RealVec& w) const {
    const RealVec aw = apply(w);
    return v[0] * aw[0] + v[1] * aw[1];
}

Rational eval_Q(const QuadraticForm& form, const RationalVec& v) {
    Rational r = eval_B(form, v, v) / 2;
    r.canonicalize();
    return r;
}

Rational eval_B(const QuadraticForm& form, const RationalVec& v, const RationalVec& w) {
    const auto& a = form.matrix();
    Rational aw0 = Rational(a[0][0]) * w[0] + Rational(a[0][1]) * w[1];
    Rational aw1 = Rational(a[1][0]) * w[0] + Rational(a[1][1]) * w[1];
    Rational r = v[0] * aw0 + v[1] * aw1;
    r.canonicalize();
    return r;
}

QuadraticForm split(const IntMat2& a, double gauge_shift) {
    if (a[0][1] != a[1][0]) throw std::invalid_argument("form matrix is not symmetric");
    for (const auto& row : a)
        for (auto e : row)
            if (std::llabs(e) > kMaxFormEntry) throw std::invalid_argument("form entry exceeds 10^6");
    const std::int64_t a11 = a[0][0], a12 = a[0][1], a22 = a[1][1];
    const std::int64_t det = a11 * a22 - a12 * a12;
    if (det >= 0) throw std::invalid_argument("form is not of signature (1,1): det A = " + std::to_string(det));
    if (!std::isfinite(gauge_shift) || std::abs(gauge_shift) > kMaxGeodesicParam)
        throw std::invalid_argument("gauge shift out of range");

    QuadraticForm f;
    f.a_ = a;
    const double disc = std::sqrt(static_cast<double>(-det));  // sqrt(b^2 - ac)
    RealMat2 p{};
    if (a11 != 0) {
        // Roots of a11 r^2 + 2 a12 r + a22, computed without cancellation.
        const double b = static_cast<double>(a12);
        const double qq = -(b + (b >= 0 ? disc : -disc));
        double r1 = qq / static_cast<double>(a11);
        double r2 = static_cast<double>(a22) / qq;
        if (r1 > r2) std::swap(r1, r2);
        const double s = std::sqrt(std::abs(static_cast<double>(a11)) / 2.0);
        const double sg = a11 > 0 ? 1.0 : -1.0;
        p = {{{s, -s * r1}, {sg * s, -sg * s * r2}}};
    } else {
        const double sb = std::sqrt(std::abs(static_cast<double>(a12)));
        p = {{{static_cast<double>(a12) / sb, static_cast<double>(a22) / (2.0 * sb)}, {0.0, sb}}};
    }
    const double er = std::exp(gauge_shift);
    for (auto& e : p[0]) e *= er;
    for (auto& e : p[1]) e /= er;
    f.p_ = p;
    f.p_inv_ = invert(p);
    f.c_ref_ = mul(f.p_inv_, {1.0, -1.0});
    return f;
}

GeodesicPoint c_of_t(const QuadraticForm& form, double t) {
    if (!std::isfinite(t) || std::abs(t) > kMaxGeodesicParam)
        throw std::domain_error("geodesic parameter |t| exceeds 50");
    const double e = std::exp(t), ei = std::exp(-t);
    GeodesicPoint g;
    g.t = t;
    g.c = mul(form.splitting_inverse(), {e, -ei});
    g.cperp = mul(form.splitting_inverse(), {e, ei});
    return g;
}

double t_of_c(const QuadraticForm& form, const RealVec& c) {
    const double qc = form.q(c);
    double amax = 0;
    for (const auto& row : form.matrix())
        for (auto e : row) amax = std::max(amax, std::abs(static_cast<double>(e)));
    const double scale = 1.0 + amax * (c[0] * c[0] + c[1] * c[1]);
    if (!(std::abs(qc + 1.0) <= 1e-9 * scale)) throw std::domain_error("vector is not on Q = -1 (Q = " + std::to_string(qc) + ")");
    if (form.b(c, form.reference()) >= 0) throw std::domain_error("vector lies in the opposite component -C_Q");
    const RealVec pc = form.split_coords(c);
    if (!(pc[0] > 0 && pc[1] < 0)) throw std::domain_error("vector lies in the opposite component -C_Q");
    return 0.5 * (std::log(pc[0]) - std::log(-pc[1]));
}

std::string to_string(AutomorphStatus s) {
    switch (s) {
        case AutomorphStatus::Ok: return "ok";
        case AutomorphStatus::NotIsometry: return "gamma^t A gamma != A";
        case AutomorphStatus::DeterminantNotOne: return "det gamma != 1";
        case AutomorphStatus::SwapsComponent: return "gamma maps C_Q to -C_Q";
    }
    return "unknown";
}

AutomorphStatus check_automorph(const QuadraticForm& form, const IntMat2& g) {
    const auto& a = form.matrix();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            i128 s = 0;
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) s += static_cast<i128>(g[k][i]) * a[k][l] * g[l][j];
            if (s != a[i][j]) return AutomorphStatus::NotIsometry;
        }
    if (static_cast<i128>(g[0][0]) * g[1][1] - static_cast<i128>(g[0][1]) * g[1][0] != 1)
        return AutomorphStatus::DeterminantNotOne;
    const RealVec cref = form.reference();
    if (form.b(act(g, cref), cref) >= 0) return AutomorphStatus::SwapsComponent;
    return AutomorphStatus::Ok;
}

Automorph make_automorph(const QuadraticForm& form, const IntMat2& gamma) {
    const auto status = check_automorph(form, gamma);
    if (status != AutomorphStatus::Ok) throw std::invalid_argument("not in Aut+(Q,Z^2): " + to_string(status));
    Automorph out;
    out.gamma = gamma;
    out.shift = t_of_c(form, act(gamma, form.reference()));
    return out;
}

double act_on_t(const QuadraticForm& form, const Automorph& gamma, double t) {
    return t_of_c(form, act(gamma.gamma, c_of_t(form, t).c));
}

std::vector<Automorph> search_automorphs(const QuadraticForm& form, std::int64_t bound) {
    if (bound < 1 || bound > kMaxAutomorphBound) throw std::invalid_argument("automorph search bound must be in [1, 10^4]");
    const auto& a = form.matrix();
    const i128 a11 = a[0][0], a12 = a[0][1], a22 = a[1][1];
    // First column (x, y) must satisfy Q(x, y) = Q(e1), second column Q(u, v) = Q(e2).
    std::vector<IntVec> first, second;
    for (std::int64_t x = -bound; x <= bound; ++x) {
        for (auto y : integer_roots(a22, 2 * a12 * x, a11 * x * x - a11, bound)) first.push_back({x, y});
        for (auto v : integer_roots(a22, 2 * a12 * x, a11 * x * x - a22, bound)) second.push_back({x, v});
    }
    std::vector<Automorph> out;
    for (const auto& col1 : first)
        for (const auto& col2 : second) {
            const IntMat2 g{{{col1[0], col2[0]}, {col1[1], col2[1]}}};
            if (static_cast<i128>(g[0][0]) * g[1][1] - static_cast<i128>(g[0][1]) * g[1][0] != 1) continue;
            if (check_automorph(form, g) == AutomorphStatus::Ok) out.push_back(make_automorph(form, g));
        }
    std::sort(out.begin(), out.end(), [](const Automorph& l, const Automorph& r) { return l.shift < r.shift; });
    return out;
}

IntMat2 multiply(const IntMat2& x, const IntMat2& y) {
    IntMat2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
    return r;
}

IntMat2 inverse_sl2(const IntMat2& g) {
    if (g[0][0] * g[1][1] - g[0][1] * g[1][0] != 1) throw std::invalid_argument("matrix is not in SL2(Z)");
    return {{{g[1][1], -g[0][1]}, {-g[1][0], g[0][0]}}};
}

IntVec act(const IntMat2& g, const IntVec& v) {
    return {g[0][0] * v[0] + g[0][1] * v[1], g[1][0] * v[0] + g[1][1] * v[1]};
}

RealVec act(const IntMat2& g, const RealVec& v) {
    return {g[0][0] * v[0] + g[0][1] * v[1], g[1][0] * v[0] + g[1][1] * v[1]};
}

}  // namespace maass
