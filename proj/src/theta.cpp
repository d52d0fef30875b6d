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

#include "maass/theta.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <numeric>

#include "maass/parallel.hpp"
#include "maass/special.hpp"

namespace maass {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMaxRadius = 5000.0;
constexpr std::int64_t kMaxPeriod = 1024;
using i128 = __int128;

// nu = (d k + n) / d, k in Z^2, with n / d the representative of a in (-1/2, 1/2]^2.
struct Coset {
    std::int64_t d = 1;
    IntVec n{0, 0};
};

Coset make_coset(const RationalVec& a) {
    RationalVec r;
    for (int i = 0; i < 2; ++i) {
        r[i] = frac(a[i]);
        if (r[i] > Rational(1, 2)) r[i] -= 1;
    }
    Coset c;
    c.d = common_denominator(r);
    for (int i = 0; i < 2; ++i) {
        Rational s = r[i] * c.d;
        s.canonicalize();
        c.n[i] = to_int64(s.get_num());
    }
    return c;
}

struct Point {
    IntVec num{};
    RealVec nu{};
    i128 q2 = 0;  // num^t A num; Q(nu) = q2 / (2 d^2)
    double q = 0.0;
};

class Lattice {
public:
    Lattice(const QuadraticForm& form, const Coset& coset) : form_(form), coset_(coset) {}

    std::int64_t d() const { return coset_.d; }

    static std::size_t shells(double radius) { return static_cast<std::size_t>(std::floor(radius + 0.5)) + 1; }

    // Points of shell s = |k|_inf with |nu|_2 <= radius, in a fixed row-major order.
    template <typename Fn>
    void for_shell(std::int64_t s, double radius, Fn&& fn) const {
        const double r2 = radius * radius;
        const auto& a = form_.matrix();
        const double dd = static_cast<double>(coset_.d);
        const double qscale = 1.0 / (2.0 * dd * dd);
        auto visit = [&](std::int64_t k1, std::int64_t k2) {
            Point p;
            p.num = {coset_.d * k1 + coset_.n[0], coset_.d * k2 + coset_.n[1]};
            p.nu = {static_cast<double>(p.num[0]) / dd, static_cast<double>(p.num[1]) / dd};
            if (p.nu[0] * p.nu[0] + p.nu[1] * p.nu[1] > r2) return;
            const i128 x = p.num[0], y = p.num[1];
            p.q2 = a[0][0] * x * x + 2 * a[0][1] * x * y + a[1][1] * y * y;
            p.q = static_cast<double>(p.q2) * qscale;
            fn(p);
        };
        if (s == 0) {
            visit(0, 0);
            return;
        }
        for (std::int64_t k2 = -s; k2 <= s; ++k2) {
            if (k2 == -s || k2 == s) {
                for (std::int64_t k1 = -s; k1 <= s; ++k1) visit(k1, k2);
            } else {
                visit(-s, k2);
                visit(s, k2);
            }
        }
    }

    std::int64_t count(double radius) const {
        std::int64_t n = 0;
        for (std::size_t s = 0; s < shells(radius); ++s)
            for_shell(static_cast<std::int64_t>(s), radius, [&](const Point&) { ++n; });
        return n;
    }

    RationalVec exact(const Point& p) const { return {ratio(p.num[0], coset_.d), ratio(p.num[1], coset_.d)}; }

private:
    const QuadraticForm& form_;
    Coset coset_;
};

// e(B(nu, b)) computed exactly mod 1 from integer numerators.
class CharacterWeight {
public:
    CharacterWeight(const QuadraticForm& form, const RationalVec& b, std::int64_t d) {
        const std::int64_t db = common_denominator(b);
        IntVec bn;
        for (int i = 0; i < 2; ++i) {
            Rational s = b[i] * db;
            s.canonicalize();
            bn[i] = to_int64(s.get_num());
        }
        const auto& a = form.matrix();
        abn_ = {static_cast<i128>(a[0][0]) * bn[0] + static_cast<i128>(a[0][1]) * bn[1],
                static_cast<i128>(a[1][0]) * bn[0] + static_cast<i128>(a[1][1]) * bn[1]};
        den_ = static_cast<i128>(d) * db;
    }
    Complex operator()(const Point& p) const {
        i128 num = abn_[0] * p.num[0] + abn_[1] * p.num[1];
        num %= den_;
        return unit_phase(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den_));
    }
    static double bound() { return 1.0; }

private:
    std::array<i128, 2> abn_{};
    i128 den_ = 1;
};

class TableWeight {
public:
    explicit TableWeight(const PeriodicWeight& m) : m_(m) {}
    Complex operator()(const Point& p) const { return m_.at(p.num); }
    double bound() const { return m_.max_abs(); }

private:
    const PeriodicWeight& m_;
};

Complex x_phase(double q, double x) {
    const double t = q * x;
    return std::polar(1.0, 2.0 * kPi * (t - std::round(t)));
}

template <typename Weight, typename Kernel>
Complex lattice_sum(const Lattice& lattice, double radius, const Weight& weight, const Kernel& kernel,
                    std::int64_t& terms) {
    const std::size_t n = Lattice::shells(radius);
    std::vector<Complex> partial(n);
    std::vector<std::int64_t> counts(n, 0);
    std::vector<std::exception_ptr> errors(n);
    parallel::parallel_for(n, [&](std::size_t s) {
        try {
            parallel::ComplexCompensatedSum acc;
            std::int64_t c = 0;
            lattice.for_shell(static_cast<std::int64_t>(s), radius, [&](const Point& p) {
                const Complex w = weight(p);
                if (w == Complex(0.0, 0.0)) return;
                acc.add(w * kernel(p));
                ++c;
            });
            partial[s] = acc.value();
            counts[s] = c;
        } catch (...) {
            errors[s] = std::current_exception();
        }
    });
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    parallel::ComplexCompensatedSum total;
    terms = 0;
    for (std::size_t s = 0; s < n; ++s) {
        total.add(partial[s]);
        terms += counts[s];
    }
    return total.value();
}

// ---- truncation bounds -------------------------------------------------------

struct Sym2 {
    double a = 0, b = 0, c = 0;  // [[a, b], [b, c]]
};

Sym2 outer(const RealVec& v, double s) { return {s * v[0] * v[0], s * v[0] * v[1], s * v[1] * v[1]}; }
Sym2 operator+(const Sym2& x, const Sym2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c}; }

// Least eigenvalue, shrunk slightly so rounding cannot make the bound optimistic.
double lambda_min(const Sym2& m) {
    const double half_diff = 0.5 * (m.a - m.c);
    const double lmax = 0.5 * (m.a + m.c) + std::hypot(half_diff, m.b);
    if (!(lmax > 0)) return 0.0;
    return std::max(0.0, (m.a * m.c - m.b * m.b) / lmax * (1.0 - 1e-9));
}

RealVec row(const QuadraticForm& form, int i) { return {form.splitting()[i][0], form.splitting()[i][1]}; }

// nu^t G(lo, hi) nu <= (1/2)((P nu)_1^2 e^{-2t} + (P nu)_2^2 e^{2t}) for every t in [lo, hi].
double gram_floor(const QuadraticForm& form, double lo, double hi) {
    return lambda_min(outer(row(form, 0), 0.5 * std::exp(-2.0 * hi)) + outer(row(form, 1), 0.5 * std::exp(2.0 * lo)));
}

// Sum over shells [rho, rho + 1), rho = R, R + 1, ..., of 16 (rho + 1) sup F. Every
// F below is non-increasing, so the sup sits at the inner edge.
template <typename F>
double shell_tail(const F& f, double radius) {
    double sum = 0.0;
    for (std::int64_t j = 0; j < 10000000; ++j) {
        const double rho = radius + static_cast<double>(j);
        const double term = 16.0 * (rho + 1.0) * f(rho);
        sum += term;
        if (term == 0.0 || term <= 1e-17 * sum) break;
    }
    return sum;
}

struct TailModel {
    ThetaKind kind;
    double y;
    double dt = 0.0;        // |t2 - t1|
    double r[2] = {0, 0};   // per-kind minorant constants

    double operator()(double rho) const {
        switch (kind) {
            case ThetaKind::PhiHat:
                return std::sqrt(y) * dt * std::exp(-2.0 * kPi * r[0] * y * rho * rho);
            case ThetaKind::Phi: {
                double s = 0.0;
                for (double ri : r) s += std::exp(-2.0 * kPi * ri * y * rho * rho) / (2.0 * rho * std::sqrt(ri * y));
                return std::sqrt(y) * s;
            }
            case ThetaKind::PhiLower:
                return std::exp(-2.0 * kPi * y * r[0] * rho * rho) / (4.0 * std::sqrt(r[0]) * rho);
            case ThetaKind::ThetaC: {
                const double s = 4.0 * r[0] * rho * rho;
                const double g = s >= 2.0 / (kPi * y) ? 0.5 * s * std::exp(-0.5 * kPi * y * s) : 1.0 / (kPi * y * std::numbers::e);
                return y * std::sqrt(y) * g;
            }
        }
        return 0.0;
    }
};

TailModel tail_model(const QuadraticForm& form, double t1, double t2, ThetaKind kind, double y) {
    TailModel m{kind, y};
    switch (kind) {
        case ThetaKind::PhiHat: {
            const double lo = std::min(t1, t2), hi = std::max(t1, t2);
            m.dt = hi - lo;
            constexpr int pieces = 64;
            double r = std::numeric_limits<double>::infinity();
            for (int k = 0; k < pieces; ++k) {
                const double a = lo + (hi - lo) * k / pieces, b = lo + (hi - lo) * (k + 1) / pieces;
                r = std::min(r, gram_floor(form, a, b));
            }
            m.r[0] = r;
            break;
        }
        case ThetaKind::Phi: {
            // On the support of each indicator, |Q| >= (B1^2 + B2^2) / (4 sinh^2 (t2 - t1)).
            const auto g1 = c_of_t(form, t1), g2 = c_of_t(form, t2);
            const double sh = std::sinh(std::abs(t2 - t1));
            const double s = 1.0 / (4.0 * sh * sh);
            m.r[0] = lambda_min(outer(form.apply(g1.c), s) + outer(form.apply(g2.c), s));
            m.r[1] = lambda_min(outer(form.apply(g1.cperp), s) + outer(form.apply(g2.cperp), s));
            break;
        }
        case ThetaKind::PhiLower:
        case ThetaKind::ThetaC:
            m.r[0] = gram_floor(form, t1, t1);
            break;
    }
    return m;
}

void require_tau(Complex tau) {
    if (!std::isfinite(tau.real()) || !std::isfinite(tau.imag()) || !(tau.imag() > 0))
        throw std::domain_error("tau must lie in the upper half plane");
}

void require_eps(double eps) {
    if (!(eps > 0) || !std::isfinite(eps)) throw std::invalid_argument("eps must be positive");
}

std::vector<double> window_ys(double y, const EvalWindow& w) {
    std::vector<double> ys{y};
    if (w.y_lo > 0) ys.push_back(w.y_lo);
    if (w.y_hi > 0) ys.push_back(w.y_hi);
    return ys;
}

struct Plan {
    double radius = 0.0;
    double tail = 0.0;
};

Plan plan_radius(const QuadraticForm& form, double t1, double t2, ThetaKind kind, const std::vector<double>& ys,
                 double target, double weight_bound) {
    Plan p;
    for (double y : ys) {
        const double r = truncation_radius(form, t1, t2, kind, y, target, weight_bound);
        if (r > p.radius) p.radius = r;
    }
    for (double y : ys) {
        const TailModel m = tail_model(form, t1, t2, kind, y);
        p.tail = std::max(p.tail, weight_bound * shell_tail(m, p.radius));
    }
    return p;
}

// ---- evaluators -------------------------------------------------------------

template <typename Weight>
EvalResult eval_phi_hat(const QuadraticForm& form, const Coset& coset, const Weight& weight, double wbound,
                        double t1, double t2, Complex tau, double eps, const EvalWindow& window) {
    require_tau(tau);
    require_eps(eps);
    c_of_t(form, t1);
    c_of_t(form, t2);
    EvalResult out;
    if (t1 == t2 || wbound == 0.0) return out;
    const double y = tau.imag(), x = tau.real();
    const auto ys = window_ys(y, window);
    const Plan plan = plan_radius(form, t1, t2, ThetaKind::PhiHat, ys, 0.5 * eps, wbound);
    const Lattice lattice(form, coset);
    const double ymax = *std::max_element(ys.begin(), ys.end());
    const double count = static_cast<double>(std::max<std::int64_t>(1, lattice.count(plan.radius)));
    const double term_tol = 0.5 * eps / (count * std::sqrt(ymax) * wbound);
    const double sy = std::sqrt(y);
    auto kernel = [&](const Point& p) {
        const RealVec s = form.split_coords(p.nu);
        const double v = damped_segment_integral(s[0] * s[0], s[1] * s[1], y, t1, t2, term_tol);
        return sy * v * x_phase(p.q, x);
    };
    out.value = lattice_sum(lattice, plan.radius, weight, kernel, out.terms_summed);
    out.truncation_radius = plan.radius;
    out.tail_bound = plan.tail + 0.5 * eps;
    return out;
}

template <typename Weight>
EvalResult eval_phi(const QuadraticForm& form, const Coset& coset, const Weight& weight, double wbound, double t1,
                    double t2, Complex tau, double eps, const EvalWindow& window) {
    require_tau(tau);
    require_eps(eps);
    const auto g1 = c_of_t(form, t1), g2 = c_of_t(form, t2);
    EvalResult out;
    if (t1 == t2 || wbound == 0.0) return out;
    const double y = tau.imag(), x = tau.real();
    const Plan plan = plan_radius(form, t1, t2, ThetaKind::Phi, window_ys(y, window), eps, wbound);
    const Lattice lattice(form, coset);
    const double orient = (t2 > t1 ? 1.0 : -1.0) * std::sqrt(y);
    auto kernel = [&](const Point& p) {
        const int s1 = sign_of_pairing(form, p.nu, g1.c) * sign_of_pairing(form, p.nu, g2.c);
        const int s2 = sign_of_pairing(form, p.nu, g1.cperp) * sign_of_pairing(form, p.nu, g2.cperp);
        const double w1 = 0.5 * (1 - s1), w2 = 0.5 * (1 - s2);
        if (w1 == 0.0 && w2 == 0.0) return Complex(0.0, 0.0);
        if (p.q2 == 0) throw QZeroError(lattice.exact(p));
        double v = 0.0;
        if (w1 > 0) {
            if (p.q2 < 0) throw std::logic_error("indicator support with Q < 0");
            v += w1 * bessel_k0(2.0 * kPi * p.q * y);
        }
        if (w2 > 0) {
            if (p.q2 > 0) throw std::logic_error("perpendicular indicator support with Q > 0");
            v += w2 * bessel_k0(-2.0 * kPi * p.q * y);
        }
        return orient * v * x_phase(p.q, x);
    };
    out.value = lattice_sum(lattice, plan.radius, weight, kernel, out.terms_summed);
    out.truncation_radius = plan.radius;
    out.tail_bound = plan.tail;
    return out;
}

template <typename Weight>
EvalResult eval_phi_lower(const QuadraticForm& form, const Coset& coset, const Weight& weight, double wbound,
                          double t0, Complex tau, double eps, const EvalWindow& window) {
    require_tau(tau);
    require_eps(eps);
    c_of_t(form, t0);
    EvalResult out;
    if (wbound == 0.0) return out;
    const double y = tau.imag(), x = tau.real();
    const auto ys = window_ys(y, window);
    const Plan plan = plan_radius(form, t0, t0, ThetaKind::PhiLower, ys, 0.5 * eps, wbound);
    const Lattice lattice(form, coset);
    const double ymax = *std::max_element(ys.begin(), ys.end());
    const double count = static_cast<double>(std::max<std::int64_t>(1, lattice.count(plan.radius)));
    const double term_tol = 0.5 * eps / (count * std::sqrt(ymax) * wbound);
    const double sy = std::sqrt(y);
    const double e2 = std::exp(2.0 * t0), em2 = std::exp(-2.0 * t0);
    auto kernel = [&](const Point& p) {
        if (p.q2 == 0) throw QZeroError(lattice.exact(p));
        const RealVec s = form.split_coords(p.nu);
        const double u = s[0] * s[0], v = s[1] * s[1];
        // B(nu, c0) B(nu, c0perp) = (P nu)_2^2 e^{2 t0} - (P nu)_1^2 e^{-2 t0}
        const int sg = sign_tol(v * e2 - u * em2, v * e2 + u * em2);
        if (sg == 0) return Complex(0.0, 0.0);
        // alpha_{t0}(nu y^{1/2}) q^{Q(nu)} = e(Q x) * (damped integral over the half line)
        const double val = sg > 0 ? damped_segment_integral(u, v, y, t0, std::numeric_limits<double>::infinity(), term_tol)
                                  : -damped_segment_integral(u, v, y, -std::numeric_limits<double>::infinity(), t0, term_tol);
        return sy * val * x_phase(p.q, x);
    };
    out.value = lattice_sum(lattice, plan.radius, weight, kernel, out.terms_summed);
    out.truncation_radius = plan.radius;
    out.tail_bound = plan.tail + 0.5 * eps;
    return out;
}

template <typename Weight>
EvalResult eval_theta_c(const QuadraticForm& form, const Coset& coset, const Weight& weight, double wbound, double t0,
                        Complex tau, double eps, const EvalWindow& window) {
    require_tau(tau);
    require_eps(eps);
    c_of_t(form, t0);
    EvalResult out;
    const double y = tau.imag(), x = tau.real();
    const Plan plan = plan_radius(form, t0, t0, ThetaKind::ThetaC, window_ys(y, window), eps, wbound);
    const Lattice lattice(form, coset);
    const double e = std::exp(t0), ei = std::exp(-t0);
    const double y32 = y * std::sqrt(y);
    auto kernel = [&](const Point& p) {
        const RealVec s = form.split_coords(p.nu);
        const double b = s[1] * e - s[0] * ei, bp = s[1] * e + s[0] * ei;
        return y32 * b * bp * std::exp(-0.5 * kPi * y * (b * b + bp * bp)) * x_phase(p.q, x);
    };
    out.value = lattice_sum(lattice, plan.radius, weight, kernel, out.terms_summed);
    out.truncation_radius = plan.radius;
    out.tail_bound = plan.tail;
    return out;
}

std::string rational_pair(const RationalVec& v) { return "(" + to_string(v[0]) + ", " + to_string(v[1]) + ")"; }

Rational exact_inverse_entry(const QuadraticForm& form, int i, int j) {
    const auto& a = form.matrix();
    const std::int64_t adj[2][2] = {{a[1][1], -a[0][1]}, {-a[1][0], a[0][0]}};
    Rational r(adj[i][j], form.det());
    r.canonicalize();
    return r;
}

RationalVec inverse_times(const QuadraticForm& form, const RationalVec& v) {
    RationalVec out;
    for (int i = 0; i < 2; ++i) {
        out[i] = exact_inverse_entry(form, i, 0) * v[0] + exact_inverse_entry(form, i, 1) * v[1];
        out[i].canonicalize();
    }
    return out;
}

}  // namespace

std::string to_string(ThetaKind kind) {
    switch (kind) {
        case ThetaKind::PhiHat: return "phihat";
        case ThetaKind::Phi: return "phi";
        case ThetaKind::PhiLower: return "philower";
        case ThetaKind::ThetaC: return "thetac";
    }
    return "?";
}

ThetaParams with_characteristics(const ThetaParams& p, const RationalVec& a, const RationalVec& b) {
    ThetaParams out = p;
    out.a = a;
    out.b = b;
    return out;
}

QZeroError::QZeroError(const RationalVec& nu)
    : std::domain_error("Q vanishes at lattice point nu = " + rational_pair(nu)), nu_(nu) {}

// ---- PeriodicWeight ------------------------------------------------------------

PeriodicWeight::PeriodicWeight(std::int64_t period) : period_(period) {
    if (period < 1 || period > kMaxPeriod) throw std::invalid_argument("period must lie in [1, 1024]");
    table_.assign(static_cast<std::size_t>(period * period), Complex(0.0, 0.0));
}

PeriodicWeight::PeriodicWeight(std::int64_t period, std::vector<Complex> table) : PeriodicWeight(period) {
    if (table.size() != table_.size()) throw std::invalid_argument("weight table must have L^2 entries");
    table_ = std::move(table);
}

std::size_t PeriodicWeight::index(std::int64_t i, std::int64_t j) const {
    i %= period_;
    j %= period_;
    if (i < 0) i += period_;
    if (j < 0) j += period_;
    return static_cast<std::size_t>(i * period_ + j);
}

PeriodicWeight PeriodicWeight::compose(const IntMat2& g) const {
    PeriodicWeight out(period_);
    for (std::int64_t i = 0; i < period_; ++i)
        for (std::int64_t j = 0; j < period_; ++j) out.set(i, j, at(act(g, IntVec{i, j})));
    return out;
}

PeriodicWeight PeriodicWeight::with_period(std::int64_t multiple) const {
    if (multiple < 1) throw std::invalid_argument("period multiple must be positive");
    PeriodicWeight out(period_ * multiple);
    for (std::int64_t i = 0; i < out.period_; ++i)
        for (std::int64_t j = 0; j < out.period_; ++j) out.set(i, j, at(i, j));
    return out;
}

double PeriodicWeight::max_abs() const {
    double m = 0.0;
    for (const auto& z : table_) m = std::max(m, std::abs(z));
    return m;
}

std::vector<IntVec> PeriodicWeight::support() const {
    std::vector<IntVec> out;
    for (std::int64_t i = 0; i < period_; ++i)
        for (std::int64_t j = 0; j < period_; ++j)
            if (at(i, j) != Complex(0.0, 0.0)) out.push_back({i, j});
    return out;
}

std::int64_t common_period(const PeriodicWeight& l, const PeriodicWeight& r) {
    return std::lcm(l.period(), r.period());
}

PeriodicWeight& PeriodicWeight::operator+=(const PeriodicWeight& other) {
    const std::int64_t l = common_period(*this, other);
    if (l != period_) *this = with_period(l / period_);
    for (std::int64_t i = 0; i < l; ++i)
        for (std::int64_t j = 0; j < l; ++j) table_[index(i, j)] += other.at(i, j);
    return *this;
}

PeriodicWeight& PeriodicWeight::operator-=(const PeriodicWeight& other) {
    PeriodicWeight neg = other;
    neg *= Complex(-1.0, 0.0);
    return *this += neg;
}

PeriodicWeight& PeriodicWeight::operator*=(Complex s) {
    for (auto& z : table_) z *= s;
    return *this;
}

// ---- public evaluators ---------------------------------------------------------

double truncation_radius(const QuadraticForm& form, double t1, double t2, ThetaKind kind, double tau_y, double eps,
                         double weight_bound) {
    if (!(tau_y > 0) || !std::isfinite(tau_y)) throw std::domain_error("truncation_radius needs Im tau > 0");
    require_eps(eps);
    if ((kind == ThetaKind::PhiHat || kind == ThetaKind::Phi) && t1 == t2) return 0.0;
    if (weight_bound == 0.0) return 0.0;
    const TailModel model = tail_model(form, t1, t2, kind, tau_y);
    for (double r : model.r)
        if (kind == ThetaKind::Phi || r == model.r[0])
            if (!(r > 0)) throw std::domain_error("truncation bound degenerates (minorant not positive definite)");
    const double target = eps / weight_bound;
    for (double radius = 0.5; radius <= kMaxRadius; radius += 0.5)
        if (shell_tail(model, radius) <= target) return radius;
    throw std::domain_error("truncation radius exceeds " + std::to_string(kMaxRadius) + "; Im tau too small");
}

double truncation_radius(const ThetaParams& params, ThetaKind kind, double tau_y, double eps) {
    return truncation_radius(params.form, params.t1, params.t2, kind, tau_y, eps, 1.0);
}

EvalResult phi_hat(const ThetaParams& params, Complex tau, double eps, const EvalWindow& window) {
    const Coset coset = make_coset(params.a);
    const CharacterWeight w(params.form, params.b, coset.d);
    return eval_phi_hat(params.form, coset, w, 1.0, params.t1, params.t2, tau, eps, window);
}

EvalResult phi(const ThetaParams& params, Complex tau, double eps, const EvalWindow& window) {
    const Coset coset = make_coset(params.a);
    const CharacterWeight w(params.form, params.b, coset.d);
    return eval_phi(params.form, coset, w, 1.0, params.t1, params.t2, tau, eps, window);
}

EvalResult phi_lower(const QuadraticForm& form, const RationalVec& a, const RationalVec& b, double t0, Complex tau,
                     double eps, const EvalWindow& window) {
    const Coset coset = make_coset(a);
    const CharacterWeight w(form, b, coset.d);
    return eval_phi_lower(form, coset, w, 1.0, t0, tau, eps, window);
}

EvalResult theta_c(const QuadraticForm& form, const RationalVec& a, const RationalVec& b, double t0, Complex tau,
                   double eps, const EvalWindow& window) {
    const Coset coset = make_coset(a);
    const CharacterWeight w(form, b, coset.d);
    return eval_theta_c(form, coset, w, 1.0, t0, tau, eps, window);
}

EvalResult phi_m(const QuadraticForm& form, const PeriodicWeight& m, double t1, double t2, Complex tau, double eps,
                 const EvalWindow& window) {
    const TableWeight w(m);
    return eval_phi(form, Coset{}, w, w.bound(), t1, t2, tau, eps, window);
}

EvalResult phi_hat_m(const QuadraticForm& form, const PeriodicWeight& m, double t1, double t2, Complex tau,
                     double eps, const EvalWindow& window) {
    const TableWeight w(m);
    return eval_phi_hat(form, Coset{}, w, w.bound(), t1, t2, tau, eps, window);
}

EvalResult phi_lower_m(const QuadraticForm& form, const PeriodicWeight& m, double t0, Complex tau, double eps,
                       const EvalWindow& window) {
    const TableWeight w(m);
    return eval_phi_lower(form, Coset{}, w, w.bound(), t0, tau, eps, window);
}

bool q_nonzero_certified(const QuadraticForm& form, const RationalVec& a) {
    const std::int64_t disc = -form.det();
    auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(disc))));
    while (root * root > disc) --root;
    while ((root + 1) * (root + 1) <= disc) ++root;
    if (root * root == disc) return false;
    return !(a[0].get_den() == 1 && a[1].get_den() == 1);
}

std::vector<CharacterTerm> character_decomposition(const QuadraticForm& form, const PeriodicWeight& m) {
    const std::int64_t l = m.period();
    std::vector<CharacterTerm> out;
    const double scale = 1.0 / static_cast<double>(l * l);
    const double floor = 1e-14 * std::max(1.0, m.max_abs());
    for (std::int64_t k1 = 0; k1 < l; ++k1)
        for (std::int64_t k2 = 0; k2 < l; ++k2) {
            parallel::ComplexCompensatedSum acc;
            for (std::int64_t i = 0; i < l; ++i)
                for (std::int64_t j = 0; j < l; ++j) {
                    const Complex v = m.at(i, j);
                    if (v == Complex(0.0, 0.0)) continue;
                    acc.add(v * unit_phase(-(i * k1 + j * k2), l));
                }
            const Complex d = acc.value() * scale;
            if (std::abs(d) <= floor) continue;
            RationalVec b = inverse_times(form, {ratio(k1, l), ratio(k2, l)});
            out.push_back({d, b});
        }
    return out;
}

std::vector<RationalVec> dual_coset_representatives(const QuadraticForm& form) {
    const std::int64_t n = std::llabs(form.det());
    std::vector<RationalVec> reps;
    for (std::int64_t k1 = 0; k1 < n; ++k1)
        for (std::int64_t k2 = 0; k2 < n; ++k2) {
            RationalVec p = inverse_times(form, {Rational(k1), Rational(k2)});
            p = {frac(p[0]), frac(p[1])};
            if (std::find(reps.begin(), reps.end(), p) == reps.end()) reps.push_back(p);
        }
    std::sort(reps.begin(), reps.end());
    if (static_cast<std::int64_t>(reps.size()) != n) throw std::logic_error("dual lattice index differs from |det A|");
    return reps;
}

double verify_split(const ThetaParams& params, Complex tau, double eps) {
    const Complex hat = phi_hat(params, tau, eps).value;
    const Complex full = phi(params, tau, eps).value;
    const Complex l1 = phi_lower(params.form, params.a, params.b, params.t1, tau, eps).value;
    const Complex l2 = phi_lower(params.form, params.a, params.b, params.t2, tau, eps).value;
    return std::abs(hat - full - l1 + l2);
}

double verify_laplacian_defect(const ThetaParams& params, Complex tau, double eps, double h) {
    if (!(h >= 1e-4 && h <= 1e-2)) throw std::invalid_argument("stencil step h must lie in [1e-4, 1e-2]");
    require_tau(tau);
    if (!(tau.imag() > h)) throw std::domain_error("stencil leaves the upper half plane");
    const EvalWindow window{tau.imag() - h, tau.imag() + h};
    auto f = [&](Complex z) { return phi_hat(params, z, eps, window).value; };
    const Complex lap = stencil_laplacian(f, tau, h);
    const Complex lhs = lap - 0.25 * f(tau);
    const Complex th2 = theta_c(params.form, params.a, params.b, params.t2, tau, eps).value;
    const Complex th1 = theta_c(params.form, params.a, params.b, params.t1, tau, eps).value;
    return std::abs(lhs - 0.5 * kPi * (th2 - th1));
}

TLawData t_law_data(const QuadraticForm& form, const RationalVec& a, const RationalVec& b) {
    const IntVec astar = form.astar();
    const RationalVec w = inverse_times(form, {Rational(astar[0]), Rational(astar[1])});
    TLawData out;
    Rational phase = -eval_Q(form, a) - eval_B(form, w, a) / 2;
    out.phase = frac(phase);
    const RationalVec half_w{Rational(w[0] / 2), Rational(w[1] / 2)};
    out.b = a + b + half_w;
    for (auto& c : out.b) c.canonicalize();
    return out;
}

double verify_transform_T(const ThetaParams& params, Complex tau, double eps) {
    const TLawData law = t_law_data(params.form, params.a, params.b);
    const Complex lhs = phi_hat(params, tau + 1.0, eps).value;
    const Complex rhs = unit_phase(law.phase) * phi_hat(with_characteristics(params, params.a, law.b), tau, eps).value;
    return std::abs(lhs - rhs);
}

double verify_transform_S(const ThetaParams& params, Complex tau, double eps) {
    require_tau(tau);
    const Complex lhs = phi_hat(params, -1.0 / tau, eps).value;
    parallel::ComplexCompensatedSum acc;
    for (const auto& p : dual_coset_representatives(params.form))
        acc.add(phi_hat(with_characteristics(params, p - params.b, params.a), tau, eps).value);
    const Complex rhs = unit_phase(eval_B(params.form, params.a, params.b)) /
                        std::sqrt(static_cast<double>(-params.form.det())) * acc.value();
    return std::abs(lhs - rhs);
}

}  // namespace maass
