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

#include "maass/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "maass/cohen.hpp"
#include "maass/parallel.hpp"

namespace maass {

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string tau_label(Complex tau) { return "tau=(" + fmt(tau.real()) + "," + fmt(tau.imag()) + ")"; }

nlohmann::json mat_json(const IntMat2& m) { return {{m[0][0], m[0][1]}, {m[1][0], m[1][1]}}; }

nlohmann::json rvec_json(const RationalVec& v) { return {to_string(v[0]), to_string(v[1])}; }

// Runs one check, recording an exception as a failed entry instead of aborting the suite.
template <typename F>
void guarded(RunReport& rep, const std::string& name, double tol, F&& f) {
    try {
        rep.add_check(name, f(), tol);
    } catch (const std::exception& e) {
        rep.add_error(name, e.what());
    }
}

double lap_tolerance(double h, double eps) { return 10.0 * h * h + 10.0 * eps / (h * h); }

Complex parse_tau(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw UsageError("tau must be given as 're,im'");
    try {
        std::size_t p1 = 0, p2 = 0;
        const std::string re = s.substr(0, comma), im = s.substr(comma + 1);
        const double x = std::stod(re, &p1), y = std::stod(im, &p2);
        if (p1 != re.size() || p2 != im.size()) throw std::invalid_argument("trailing characters");
        if (!(y > 0)) throw UsageError("tau must have positive imaginary part");
        return {x, y};
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception&) {
        throw UsageError("malformed tau '" + s + "'");
    }
}

IntMat2 parse_matrix_literal(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        if (!j.is_array() || j.size() != 2) throw std::invalid_argument("");
        IntMat2 m{};
        for (std::size_t r = 0; r < 2; ++r) {
            if (!j[r].is_array() || j[r].size() != 2) throw std::invalid_argument("");
            for (std::size_t c = 0; c < 2; ++c) {
                if (!j[r][c].is_number_integer()) throw std::invalid_argument("");
                m[r][c] = j[r][c].get<std::int64_t>();
            }
        }
        return m;
    } catch (const std::exception&) {
        throw UsageError("form must be a JSON 2x2 integer matrix like [[3,0],[0,-2]]");
    }
}

RationalVec parse_vector_literal(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        if (!j.is_array() || j.size() != 2) throw std::invalid_argument("");
        RationalVec v;
        for (std::size_t i = 0; i < 2; ++i) {
            if (j[i].is_string())
                v[i] = parse_rational(j[i].get<std::string>());
            else if (j[i].is_number_integer())
                v[i] = Rational(j[i].get<long>());
            else
                throw std::invalid_argument("");
        }
        return v;
    } catch (const std::exception&) {
        throw UsageError("vector must be a JSON pair of rationals like [\"1/6\",\"0\"]");
    }
}

RealVec parse_real_pair(const std::string& text) {
    try {
        const auto j = nlohmann::json::parse(text);
        if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) throw std::invalid_argument("");
        return {j[0].get<double>(), j[1].get<double>()};
    } catch (const std::exception&) {
        throw UsageError("point must be a JSON pair of reals like [-1.1547, 1.7320]");
    }
}

std::string coefficient_text(const mpz_class& z) { return z.get_str(); }

nlohmann::json coefficient_json(const mpz_class& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

void family_checks(RunReport& rep, const std::string& label, const FamilySpec& spec, const std::vector<Complex>& taus,
                   double eps) {
    try {
        validate_family(spec);
        rep.add_flag(label + ".condition", true);
    } catch (const std::exception& e) {
        rep.add_error(label + ".condition", e.what());
        return;
    }
    for (Complex tau : taus) {
        guarded(rep, label + ".c_independence " + tau_label(tau), 4 * eps,
                [&] { return verify_c_independence(spec, spec.c_t, spec.c_t + 0.7, tau, eps); });
        guarded(rep, label + ".hat_equals_phi " + tau_label(tau), 3 * eps,
                [&] { return std::abs(family_sum_hat(spec, tau, eps).value - family_sum(spec, tau, eps).value); });
    }
}

}  // namespace

RunReport cmd_qseries_verify(SeriesKind kind, std::int64_t order) {
    RunReport rep("qseries verify");
    rep.inputs() = {{"kind", to_string(kind)}, {"order", order}};
    const IdentityReport r = verify_identity(kind, order);
    nlohmann::json detail = {{"order", r.order}};
    if (r.first_mismatch) detail["first_mismatch"] = *r.first_mismatch;
    rep.add_flag(to_string(kind) + " identity", r.match, detail);
    return rep;
}

RunReport cmd_theta_eval(const ThetaParams& p, Complex tau, double eps, ThetaKind kind) {
    RunReport rep("theta eval");
    rep.inputs() = {{"A", mat_json(p.form.matrix())}, {"a", rvec_json(p.a)}, {"b", rvec_json(p.b)}, {"t1", p.t1},
                    {"t2", p.t2}, {"tau", complex_json(tau)}, {"eps", eps}, {"kind", to_string(kind)}};
    EvalResult r;
    switch (kind) {
        case ThetaKind::PhiHat: r = phi_hat(p, tau, eps); break;
        case ThetaKind::Phi: r = phi(p, tau, eps); break;
        case ThetaKind::PhiLower: r = phi_lower(p.form, p.a, p.b, p.t1, tau, eps); break;
        case ThetaKind::ThetaC: r = theta_c(p.form, p.a, p.b, p.t1, tau, eps); break;
    }
    rep.add_value("value", complex_json(r.value));
    rep.add_value("truncation_radius", r.truncation_radius);
    rep.add_value("terms_summed", r.terms_summed);
    rep.add_check("tail_bound", r.tail_bound, eps);
    return rep;
}

RunReport cmd_verify_all(const VerifyAllOptions& o) {
    RunReport rep("verify all");
    nlohmann::json taus = nlohmann::json::array();
    for (Complex t : o.taus) taus.push_back(complex_json(t));
    rep.inputs() = {{"taus", taus}, {"eps", o.eps}, {"h", o.h}, {"family", o.family ? to_json(*o.family) : nullptr}};
    if (o.taus.empty()) throw UsageError("at least one tau is needed");
    const double eps = o.eps, h = o.h;
    const auto& ex = cohen_example();
    const ThetaParams p0 = ex.params(0);
    const IntMat2 gamma_t{{{1, 1}, {0, 1}}}, gamma_l{{{1, 0}, {2, 1}}};

    // Exact identities.
    for (SeriesKind k : {SeriesKind::Sigma, SeriesKind::SigmaStar}) {
        const IdentityReport r = verify_identity(k, 1000);
        rep.add_flag("qseries." + to_string(k) + " order=1000", r.match);
    }

    for (Complex tau : o.taus) {
        const std::string at = " " + tau_label(tau);
        guarded(rep, "cohen.split" + at, 4 * eps, [&] { return verify_split(p0, tau, eps); });
        guarded(rep, "cohen.transform_T" + at, 2 * eps, [&] { return verify_transform_T(p0, tau, eps); });
        guarded(rep, "cohen.transform_S" + at, (1.0 + 6.0) * eps, [&] { return verify_transform_S(p0, tau, eps); });
        guarded(rep, "cohen.identity_phi" + at, 4 * eps, [&] { return verify_cohen_identity({tau}, eps); });
        guarded(rep, "cohen.identity_phihat" + at, 4 * eps,
                [&] { return verify_cohen_identity({tau}, eps, CohenSide::PhiHat); });
        guarded(rep, "cohen.phi_lower_c1_c2" + at, 2 * eps, [&] {
            return std::abs(phi_lower(p0.form, p0.a, p0.b, p0.t1, tau, eps).value -
                            phi_lower(p0.form, p0.a, p0.b, p0.t2, tau, eps).value);
        });
        guarded(rep, "cohen.extra_relation" + at, 2 * eps, [&] {
            const ThetaParams q = with_characteristics(p0, {-p0.a[0], p0.a[1]}, {-p0.b[0], p0.b[1]});
            return std::abs(phi_hat(q, tau, eps).value - phi_hat(p0, tau, eps).value);
        });
        guarded(rep, "cohen.gauge_independence" + at, 2 * eps, [&] {
            constexpr double r = 0.37;
            ThetaParams q = p0;
            q.form = split(p0.form.matrix(), r);
            q.t1 += r;
            q.t2 += r;
            return std::abs(phi_hat(q, tau, eps).value - phi_hat(p0, tau, eps).value);
        });
        guarded(rep, "vector.T" + at, 6 * eps, [&] { return verify_vector_T(tau, eps); });
        guarded(rep, "vector.S" + at, 6 * eps, [&] { return verify_vector_S(tau, eps); });
        for (const auto& [name, g] : {std::pair{"T", gamma_t}, std::pair{"L", gamma_l}, std::pair{"(5,4;6,5)", ex.gamma}})
            guarded(rep, std::string("multiplier.") + name + at, 4 * eps, [&] { return verify_multiplier(g, tau, eps); });
        guarded(rep, "cohen_family.rescaled" + at, 2 * eps, [&] {
            const FamilySpec f = cohen_family();
            return std::abs(family_sum(f, tau, eps).value - phi(p0, 12.0 * tau, eps).value / std::sqrt(12.0));
        });
    }

    // Word independence of the multiplier over random words.
    {
        std::mt19937_64 rng(20260);
        std::uniform_int_distribution<int> letter(0, 4), length(1, 12);
        bool ok = true;
        nlohmann::json words = nlohmann::json::array();
        for (int k = 0; k < 20; ++k) {
            std::vector<Letter> w;
            const int len = length(rng);
            for (int i = 0; i < len; ++i) w.push_back(static_cast<Letter>(letter(rng)));
            const MultiplierWord direct{word_product(w), w};
            const MultiplierWord found = gamma02_decompose(direct.gamma);
            ok = ok && direct.exponent() == found.exponent() && found.product() == direct.gamma;
            words.push_back({direct.to_string(), found.to_string(), direct.exponent(), found.exponent()});
        }
        rep.add_flag("multiplier.word_independence", ok, words);
    }

    // Finite-difference checks at the first tau.
    const Complex tau0 = o.taus.front();
    const double eps_lap = std::min(eps, 1e-12);
    const EvalWindow window{tau0.imag() - h, tau0.imag() + h};
    try {
        const double r1 = verify_laplacian_defect(p0, tau0, eps_lap, h);
        const double r2 = verify_laplacian_defect(p0, tau0, eps_lap, h / 2);
        rep.add_check("laplacian_defect h=" + fmt(h) + " " + tau_label(tau0), r1, lap_tolerance(h, eps_lap));
        rep.add_flag("laplacian_defect.richardson", r2 / r1 >= 0.15 && r2 / r1 <= 0.45, {{"ratio", r2 / r1}});
    } catch (const std::exception& e) {
        rep.add_error("laplacian_defect", e.what());
    }
    guarded(rep, "eigenfunction.phi0 " + tau_label(tau0), lap_tolerance(h, eps_lap), [&] {
        return verify_eigenfunction([&](Complex z) { return cohen_phi0(z, eps_lap, window).value; }, tau0, h);
    });
    const FamilySpec cf = cohen_family(), sf = synthetic_family();
    guarded(rep, "eigenfunction.cohen_family " + tau_label(tau0), lap_tolerance(h, eps_lap), [&] {
        return verify_eigenfunction([&](Complex z) { return family_sum(cf, z, eps_lap, window).value; }, tau0, h);
    });
    guarded(rep, "eigenfunction.synthetic_family " + tau_label(tau0), lap_tolerance(h, eps_lap), [&] {
        return verify_eigenfunction([&](Complex z) { return family_sum(sf, z, eps_lap, window).value; }, tau0, h);
    });

    family_checks(rep, "cohen_family", cf, o.taus, eps);
    family_checks(rep, "synthetic_family", sf, o.taus, eps);
    if (o.family) family_checks(rep, "user_family", *o.family, o.taus, eps);
    return rep;
}

std::string export_text(ExportWhat what, std::int64_t order, ExportFormat format) {
    std::vector<std::pair<std::int64_t, mpz_class>> rows;
    std::string header = "exponent,coefficient", name;
    if (what == ExportWhat::TCoeffs) {
        const TCoefficients t = t_coefficients(order);
        for (const auto& [n, v] : t.table) rows.emplace_back(n, v);
        header = "n,T";
        name = "t";
    } else {
        const IntPowerSeries s = what == ExportWhat::SigmaCoeffs ? sigma_series(order) : sigma_star_series(order);
        for (std::int64_t k = 0; k <= s.order; ++k) rows.emplace_back(k, s[k]);
        name = what == ExportWhat::SigmaCoeffs ? "sigma" : "sigma-star";
    }
    std::ostringstream os;
    if (format == ExportFormat::Csv) {
        os << header << '\n';
        for (const auto& [k, v] : rows) os << k << ',' << coefficient_text(v) << '\n';
    } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [k, v] : rows) arr.push_back({k, coefficient_json(v)});
        nlohmann::json j = {{"schema", kReportSchema}, {"what", name}, {"order", order}, {"coefficients", arr}};
        os << j.dump() << '\n';
    }
    return os.str();
}

RunReport cmd_export(ExportWhat what, std::int64_t order, ExportFormat format, const std::string& path) {
    RunReport rep("export");
    static const char* names[] = {"t", "sigma", "sigma-star"};
    rep.inputs() = {{"what", names[static_cast<int>(what)]}, {"order", order},
                    {"format", format == ExportFormat::Csv ? "csv" : "json"}, {"out", path}};
    const std::string text = export_text(what, order, format);
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        rep.add_error("write", "cannot open '" + path + "' for writing");
        return rep;
    }
    f << text;
    f.close();
    if (!f) {
        rep.add_error("write", "write to '" + path + "' failed");
        return rep;
    }
    rep.add_flag("write", true, {{"bytes", text.size()}});
    return rep;
}

FamilySpec load_family_spec(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw UsageError("cannot read family spec '" + path + "'");
    try {
        const auto j = nlohmann::json::parse(f);
        return parse_family_spec(j);
    } catch (const std::exception& e) {
        throw UsageError("malformed family spec '" + path + "': " + e.what());
    }
}

RunReport cmd_family_validate(const FamilySpec& spec, Complex tau, double eps) {
    RunReport rep("family validate");
    rep.inputs() = {{"family", to_json(spec)}, {"tau", complex_json(tau)}, {"eps", eps}};
    family_checks(rep, "family", spec, {tau}, eps);
    if (rep.pass()) rep.add_value("family_sum", complex_json(family_sum(spec, tau, eps).value));
    return rep;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Indefinite theta functions of signature (1,1) and Maass waveforms"};
    app.set_help_flag("--help", "print this help");
    app.require_subcommand(1);
    std::size_t threads = 0;
    app.add_option("--threads", threads, "worker threads (default: MAASS_THREADS or hardware)");

    auto* qs = app.add_subcommand("qseries", "exact q-series identities");
    qs->require_subcommand(1);
    auto* qs_verify = qs->add_subcommand("verify", "compare hypergeometric and indefinite theta expansions");
    std::string kind_text;
    std::int64_t order = 0;
    qs_verify->add_option("--kind", kind_text)->required()->check(CLI::IsMember({"sigma", "sigma-star"}));
    qs_verify->add_option("--order", order)->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{kMaxSeriesOrder}));

    auto* th = app.add_subcommand("theta", "lattice-sum evaluation");
    th->require_subcommand(1);
    auto* th_eval = th->add_subcommand("eval", "evaluate one theta function");
    std::string preset, form_text = "[[3,0],[0,-2]]", a_text = "[\"1/6\",\"0\"]", b_text = "[\"1/6\",\"1/4\"]";
    std::string c1_text, c2_text, tau_text = "0,1", theta_kind = "phihat";
    double t1 = 0, t2 = 0, eps = 1e-10;
    th_eval->add_option("--preset", preset)->check(CLI::IsMember({"cohen"}));
    th_eval->add_option("--A", form_text, "form matrix as JSON");
    th_eval->add_option("--a", a_text, "coset vector as JSON rationals");
    th_eval->add_option("--b", b_text, "character vector as JSON rationals");
    auto* t1_opt = th_eval->add_option("--t1", t1, "parameter of c1 (c0 for philower/thetac)");
    auto* t2_opt = th_eval->add_option("--t2", t2, "parameter of c2");
    th_eval->add_option("--c1", c1_text, "c1 as a JSON real pair (alternative to --t1)")->excludes(t1_opt);
    th_eval->add_option("--c2", c2_text, "c2 as a JSON real pair (alternative to --t2)")->excludes(t2_opt);
    th_eval->add_option("--tau", tau_text, "tau as 're,im'");
    th_eval->add_option("--eps", eps)->check(CLI::PositiveNumber);
    th_eval->add_option("--kind", theta_kind)->check(CLI::IsMember({"phihat", "phi", "philower", "thetac"}));

    auto* ver = app.add_subcommand("verify", "verification suites");
    ver->require_subcommand(1);
    auto* ver_all = ver->add_subcommand("all", "run every verification");
    std::vector<std::string> tau_list;
    double v_eps = 1e-10, v_h = 1e-3;
    std::string family_path;
    ver_all->add_option("--tau", tau_list, "evaluation points 're,im' (repeatable)");
    ver_all->add_option("--eps", v_eps)->check(CLI::Range(1e-14, 1e-2));
    ver_all->add_option("--h", v_h)->check(CLI::Range(1e-4, 1e-2));
    ver_all->add_option("--family", family_path, "additional family spec (JSON)");

    auto* exp = app.add_subcommand("export", "write coefficient tables");
    std::string what_text, format_text = "csv", out_path;
    std::int64_t exp_order = 0;
    exp->add_option("--what", what_text)->required()->check(CLI::IsMember({"t", "sigma", "sigma-star"}));
    exp->add_option("--order", exp_order)->required()->check(CLI::Range(std::int64_t{1}, std::int64_t{24 * kMaxSeriesOrder}));
    exp->add_option("--format", format_text)->check(CLI::IsMember({"json", "csv"}));
    exp->add_option("--out", out_path)->required();

    auto* fam = app.add_subcommand("family", "family specs");
    fam->require_subcommand(1);
    auto* fam_val = fam->add_subcommand("validate", "check a family spec and its c-independence");
    std::string spec_path, f_tau = "0,1";
    double f_eps = 1e-9;
    fam_val->add_option("--spec", spec_path)->required();
    fam_val->add_option("--tau", f_tau);
    fam_val->add_option("--eps", f_eps)->check(CLI::PositiveNumber);

    auto usage = [&](const std::string& message) {
        out << nlohmann::json{{"schema", kReportSchema}, {"error", message}, {"pass", false}}.dump(2) << '\n';
        return 2;
    };

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return usage(e.what());
    }

    const parallel::ScopedWorkerCount scoped(threads);
    try {
        std::optional<RunReport> rep;
        if (qs_verify->parsed()) {
            if (order > kMaxSeriesOrder) throw UsageError("order too large");
            rep = cmd_qseries_verify(kind_text == "sigma" ? SeriesKind::Sigma : SeriesKind::SigmaStar, order);
        } else if (th_eval->parsed()) {
            ThetaParams p;
            if (preset == "cohen") {
                p = cohen_example().params(0);
            } else {
                p.form = split(parse_matrix_literal(form_text));
                p.a = parse_vector_literal(a_text);
                p.b = parse_vector_literal(b_text);
                p.t1 = c1_text.empty() ? t1 : t_of_c(p.form, parse_real_pair(c1_text));
                p.t2 = c2_text.empty() ? t2 : t_of_c(p.form, parse_real_pair(c2_text));
            }
            if (preset == "cohen" && th_eval->count("--a")) p.a = parse_vector_literal(a_text);
            if (preset == "cohen" && th_eval->count("--b")) p.b = parse_vector_literal(b_text);
            const ThetaKind k = theta_kind == "phi"        ? ThetaKind::Phi
                                : theta_kind == "philower" ? ThetaKind::PhiLower
                                : theta_kind == "thetac"   ? ThetaKind::ThetaC
                                                           : ThetaKind::PhiHat;
            rep = cmd_theta_eval(p, parse_tau(tau_text), eps, k);
        } else if (ver_all->parsed()) {
            VerifyAllOptions o;
            o.eps = v_eps;
            o.h = v_h;
            if (!tau_list.empty()) {
                o.taus.clear();
                for (const auto& t : tau_list) o.taus.push_back(parse_tau(t));
            }
            if (!family_path.empty()) o.family = load_family_spec(family_path);
            rep = cmd_verify_all(o);
        } else if (exp->parsed()) {
            const ExportWhat w = what_text == "t"       ? ExportWhat::TCoeffs
                                 : what_text == "sigma" ? ExportWhat::SigmaCoeffs
                                                        : ExportWhat::SigmaStarCoeffs;
            if (w != ExportWhat::TCoeffs && exp_order > kMaxSeriesOrder) throw UsageError("order too large for series export");
            rep = cmd_export(w, exp_order, format_text == "json" ? ExportFormat::Json : ExportFormat::Csv, out_path);
        } else if (fam_val->parsed()) {
            rep = cmd_family_validate(load_family_spec(spec_path), parse_tau(f_tau), f_eps);
        }
        if (!rep) return usage("no command given");
        out << rep->to_json().dump(2) << '\n';
        return rep->pass() ? 0 : 1;
    } catch (const UsageError& e) {
        return usage(e.what());
    } catch (const QZeroError& e) {
        out << nlohmann::json{{"schema", kReportSchema},
                              {"error", e.what()},
                              {"nu", rvec_json(e.nu())},
                              {"pass", false}}
                   .dump(2)
            << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        return usage(e.what());
    } catch (const std::domain_error& e) {
        return usage(e.what());
    } catch (const std::exception& e) {
        out << nlohmann::json{{"schema", kReportSchema}, {"error", e.what()}, {"pass", false}}.dump(2) << '\n';
        return 1;
    }
}

}  // namespace maass
