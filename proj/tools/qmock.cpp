#include "qmock/appell.hpp"
#include "qmock/holoproj.hpp"
#include "qmock/jacobi_theta.hpp"
#include "qmock/json_io.hpp"
#include "qmock/parallel.hpp"

#include <CLI11.hpp>

#include <complex>
#include <iostream>

using namespace qmock;

namespace {

std::complex<double> parse_complex(const std::string& s) {
    // accepts "a+bi", "a-bi", "bi", "a"
    std::string t = s;
    if (t.empty()) throw CLI::ValidationError("empty complex literal");
    double re = 0, im = 0;
    size_t ipos = t.find('i');
    if (ipos == std::string::npos) {
        re = std::stod(t);
        return {re, 0};
    }
    // split at the last sign that is not at position 0 and not after e/E
    size_t split = std::string::npos;
    for (size_t k = t.size() - 1; k > 0; --k) {
        if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    std::string imstr;
    if (split == std::string::npos) {
        imstr = t.substr(0, ipos);
    } else {
        re = std::stod(t.substr(0, split));
        imstr = t.substr(split, ipos - split);
    }
    if (imstr.empty() || imstr == "+")
        im = 1;
    else if (imstr == "-")
        im = -1;
    else
        im = std::stod(imstr);
    return {re, im};
}

int emit_report(const VerificationReport& rep, bool json) {
    if (json)
        std::cout << report_to_json(rep).dump(2) << "\n";
    else
        std::cout << rep.line() << "\n";
    return rep.passed() || rep.status == VerificationReport::Status::Skipped ? 0 : 1;
}

int emit_reports(const std::vector<VerificationReport>& reps, bool json) {
    int rc = 0;
    if (json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reps) arr.push_back(report_to_json(r));
        std::cout << arr.dump(2) << "\n";
    }
    for (const auto& r : reps) {
        if (!json) std::cout << r.line() << "\n";
        if (r.status == VerificationReport::Status::Fail) rc = 1;
    }
    return rc;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series toolkit for small divisor functions, Hurwitz class numbers, "
                 "and Appell-Lerch identities"};
    app.require_subcommand(1);

    bool json = false;
    long prec = 200;
    double tol = 1e-8;
    int threads = default_thread_count();
    unsigned long seed = 20240901;
    app.add_flag("--json", json, "emit JSON instead of text");
    app.add_option("--prec", prec, "series precision (q-exponent bound)");
    app.add_option("--tol", tol, "numeric tolerance");
    app.add_option("--threads", threads, "worker threads (default: QMOCK_THREADS or hardware)");
    app.add_option("--seed", seed, "PRNG seed for randomized checks");

    std::string chi_spec = "trivial:1", psi_spec = "kronecker:-4";

    // ---- sigma ----
    auto* sigma = app.add_subcommand("sigma", "small divisor function values");
    int sigma_kind = 2;
    long sigma_upto = 30;
    sigma->add_option("--kind", sigma_kind, "1 or 2")->check(CLI::IsMember({1, 2}));
    sigma->add_option("--chi", chi_spec, "character spec (kind 2 only)");
    sigma->add_option("--psi", psi_spec, "character spec");
    sigma->add_option("--upto", sigma_upto, "largest n");

    // ---- hurwitz ----
    auto* hur = app.add_subcommand("hurwitz", "Hurwitz class numbers H(0..N)");
    long hur_upto = 16;
    hur->add_option("--upto", hur_upto, "largest discriminant");

    // ---- theta ----
    auto* theta = app.add_subcommand("theta", "Shimura theta series of a character");
    theta->add_option("--psi", psi_spec, "character spec");

    // ---- mockq ----
    auto* mockq = app.add_subcommand("mockq", "mock numerator and plus part");
    std::string mock_part = "both";
    mockq->add_option("--chi", chi_spec, "character spec");
    mockq->add_option("--psi", psi_spec, "character spec");
    mockq->add_option("--part", mock_part, "numerator|plus|both")
        ->check(CLI::IsMember({"numerator", "plus", "both"}));

    // ---- sturm ----
    auto* sturm = app.add_subcommand("sturm", "Sturm bound floor(k m / 12)");
    std::string weight_str = "3";
    long level = 4;
    sturm->add_option("--weight", weight_str, "weight (rational, e.g. 3 or 3/2)");
    sturm->add_option("--level", level, "level N");

    // ---- congruence ----
    auto* cong = app.add_subcommand("congruence", "p-adic congruence check of the U(p^b) image");
    long cong_p = 3;
    int cong_a = 1, cong_b = 1;
    cong->add_option("--p", cong_p, "odd prime");
    cong->add_option("--a", cong_a, "theta rescaling exponent");
    cong->add_option("--b", cong_b, "U-operator exponent");
    cong->add_option("--chi", chi_spec, "character spec");
    cong->add_option("--psi", psi_spec, "character spec");

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "identity verification harnesses");
    verify->require_subcommand(1);
    auto* v_hurwitz = verify->add_subcommand("hurwitz", "class number identity");
    auto* v_holo = verify->add_subcommand("holoproj", "pi_3 cancellation (divisor vs lattice routes)");
    v_holo->add_option("--chi", chi_spec, "character spec");
    v_holo->add_option("--psi", psi_spec, "character spec");
    auto* v_jac = verify->add_subcommand("jacobi-poly", "Jacobi polynomial dual formulas");
    long v_jac_deg = 10, v_jac_trials = 100;
    v_jac->add_option("--max-degree", v_jac_deg, "max polynomial degree");
    v_jac->add_option("--trials", v_jac_trials, "random arguments per configuration");
    auto* v_lip = verify->add_subcommand("lipschitz", "Lipschitz summation residuals");
    auto* v_eich = verify->add_subcommand("eichler", "Eichler integral rewriting residuals");
    auto* v_gamma = verify->add_subcommand("gamma", "incomplete Gamma recurrence grid");
    auto* v_al = verify->add_subcommand("alprop", "Appell-Lerch rewriting of the sigma2 series");
    v_al->add_option("--chi", chi_spec, "character spec");
    v_al->add_option("--psi", psi_spec, "character spec");
    auto* v_pt = verify->add_subcommand("partial-theta", "A_2 kernel Fourier extraction");
    auto* v_pii = verify->add_subcommand("prop-ii", "reciprocal theta Laurent data vs contour integral");
    std::string tau_str = "0+1i";
    v_pii->add_option("--tau", tau_str, "evaluation point in the upper half plane");
    auto* v_tp = verify->add_subcommand("triple-product", "theta sum vs product expansion");
    auto* v_cong = verify->add_subcommand("congruence", "Theorem-style congruence sweep");
    v_cong->add_option("--chi", chi_spec, "character spec");
    v_cong->add_option("--psi", psi_spec, "character spec");
    auto* v_all = verify->add_subcommand("all", "every identity harness (acceptance entry point)");

    // ---- search ----
    auto* search = app.add_subcommand("search-hurwitz-analogue",
                                      "scan (C, t) for Hurwitz-type identities; reports candidates only");
    std::string c_range = "-16:16", t_range = "2:16";
    search->add_option("--psi", psi_spec, "odd character from the admissible Kronecker set");
    search->add_option("--C-range", c_range, "lo:hi rational bounds for C");
    search->add_option("--t-range", t_range, "lo:hi integer bounds for the progression modulus");

    // global flags remain usable after a subcommand name
    for (auto* sub : app.get_subcommands(nullptr)) {
        sub->fallthrough();
        for (auto* sub2 : sub->get_subcommands(nullptr)) sub2->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int base = app.exit(e);
        return base == 0 ? 0 : 2;
    }

    try {
        if (*sigma) {
            DirichletChar chi = DirichletChar::parse(chi_spec);
            DirichletChar psi = DirichletChar::parse(psi_spec);
            nlohmann::json arr = nlohmann::json::array();
            for (long n = 1; n <= sigma_upto; ++n) {
                Cyclo v = sigma_kind == 1 ? sigma_small_1(psi, n) : sigma_small_2(chi, psi, n);
                if (json)
                    arr.push_back({{"n", n}, {"value", cyclo_to_json(v)}});
                else
                    std::cout << n << "\t" << v.str() << "\n";
            }
            if (json) std::cout << arr.dump(2) << "\n";
            return 0;
        }
        if (*hur) {
            auto H = hurwitz_table(hur_upto);
            nlohmann::json arr = nlohmann::json::array();
            for (long n = 0; n <= hur_upto; ++n) {
                if (json)
                    arr.push_back({{"n", n}, {"H", rat_str(H[n])}});
                else
                    std::cout << n << "\t" << rat_str(H[n]) << "\n";
            }
            if (json) std::cout << arr.dump(2) << "\n";
            return 0;
        }
        if (*theta) {
            DirichletChar psi = DirichletChar::parse(psi_spec);
            QSeries t = theta_series(psi, prec);
            std::cout << (json ? qseries_to_json(t).dump(2) : qseries_to_text(t)) << "\n";
            return 0;
        }
        if (*mockq) {
            DirichletChar chi = DirichletChar::parse(chi_spec);
            DirichletChar psi = DirichletChar::parse(psi_spec);
            nlohmann::json out;
            if (mock_part == "numerator" || mock_part == "both") {
                QSeries n = mock_numerator(chi, psi, prec);
                if (json)
                    out["numerator"] = qseries_to_json(n);
                else
                    std::cout << "# numerator\n" << qseries_to_text(n);
            }
            if (mock_part == "plus" || mock_part == "both") {
                QSeries p = mock_plus_part(chi, psi, prec);
                if (json)
                    out["plus"] = qseries_to_json(p);
                else
                    std::cout << "# plus part\n" << qseries_to_text(p);
            }
            if (json) std::cout << out.dump(2) << "\n";
            return 0;
        }
        if (*sturm) {
            long b = sturm_bound(parse_rational(weight_str), level);
            if (json)
                std::cout << nlohmann::json{{"weight", weight_str}, {"level", level}, {"bound", b}}.dump(2)
                          << "\n";
            else
                std::cout << b << "\n";
            return 0;
        }
        if (*cong) {
            DirichletChar chi = DirichletChar::parse(chi_spec);
            DirichletChar psi = DirichletChar::parse(psi_spec);
            return emit_report(padic_congruence_check(psi, chi, cong_p, cong_a, cong_b, prec), json);
        }
        if (*verify) {
            if (*v_hurwitz) return emit_report(verify_hurwitz_identity(prec, threads), json);
            if (*v_holo) {
                DirichletChar chi = DirichletChar::parse(chi_spec);
                DirichletChar psi = DirichletChar::parse(psi_spec);
                return emit_report(verify_pi3_cancellation(chi, psi, prec), json);
            }
            if (*v_jac) return emit_report(verify_jacobi_poly_duality(8, v_jac_deg, v_jac_trials, seed), json);
            if (*v_lip) return emit_report(verify_lipschitz(tol), json);
            if (*v_eich) return emit_report(verify_eichler(tol), json);
            if (*v_gamma) return emit_report(verify_gamma_recurrence(std::min(tol, 1e-10)), json);
            if (*v_al) {
                DirichletChar chi = DirichletChar::parse(chi_spec);
                DirichletChar psi = DirichletChar::parse(psi_spec);
                return emit_report(verify_alprop(chi, psi, prec, threads), json);
            }
            if (*v_pt) return emit_report(verify_partial_theta(prec), json);
            if (*v_pii) return emit_report(verify_prop_ii(parse_complex(tau_str), tol, 1e-10), json);
            if (*v_tp) return emit_report(verify_triple_product(std::min(prec, 24L)), json);
            if (*v_cong) {
                DirichletChar chi = DirichletChar::parse(chi_spec);
                DirichletChar psi = DirichletChar::parse(psi_spec);
                std::vector<VerificationReport> reps;
                for (long p : {3L, 5L, 7L})
                    for (int a = 1; a <= 2; ++a)
                        for (int b = 1; b <= 2; ++b)
                            reps.push_back(padic_congruence_check(psi, chi, p, a, b, prec));
                return emit_reports(reps, json);
            }
            if (*v_all) {
                std::vector<VerificationReport> reps;
                reps.push_back(verify_hurwitz_identity(std::min(prec, 800L), threads));
                for (const char* pr : {"kronecker:-4", "kronecker:-8", "kronecker:-3"})
                    reps.push_back(verify_pi3_cancellation(DirichletChar::parse("kronecker:12"),
                                                           DirichletChar::parse(pr), prec));
                reps.push_back(verify_pi3_cancellation(DirichletChar::trivial(1),
                                                       DirichletChar::parse("kronecker:-4"), prec));
                reps.push_back(verify_alprop(DirichletChar::parse("kronecker:8"),
                                             DirichletChar::parse("kronecker:-4"),
                                             std::min(prec, 300L), threads));
                reps.push_back(verify_partial_theta(std::min(prec, 100L)));
                reps.push_back(verify_triple_product(20));
                reps.push_back(verify_elliptic_transform(16));
                reps.push_back(verify_prop_ii({0, 1}, tol, 1e-10));
                reps.push_back(verify_prop_ii({0, 2}, tol, 1e-10));
                reps.push_back(verify_jacobi_poly_duality(8, 10, 100, seed));
                reps.push_back(verify_lipschitz(tol));
                reps.push_back(verify_gamma_recurrence(1e-10));
                reps.push_back(verify_eichler(tol));
                for (long p : {3L, 5L, 7L})
                    for (int a = 1; a <= 2; ++a)
                        for (int b = 1; b <= 2; ++b) {
                            reps.push_back(padic_congruence_check(
                                DirichletChar::parse("kronecker:-4"),
                                DirichletChar::parse("kronecker:12"), p, a, b, prec));
                            reps.push_back(padic_congruence_check(
                                DirichletChar::parse("kronecker:-4"), DirichletChar::trivial(1), p,
                                a, b, prec));
                        }
                return emit_reports(reps, json);
            }
        }
        if (*search) {
            DirichletChar psi = DirichletChar::parse(psi_spec);
            auto parse_range = [](const std::string& s) {
                size_t c = s.find(':');
                if (c == std::string::npos) throw std::invalid_argument("range needs lo:hi");
                return std::pair<std::string, std::string>(s.substr(0, c), s.substr(c + 1));
            };
            auto [clo, chi_s] = parse_range(c_range);
            auto [tlo, thi] = parse_range(t_range);
            auto cands = search_hurwitz_analogue(psi, parse_rational(clo), parse_rational(chi_s),
                                                 std::stol(tlo), std::stol(thi), prec);
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& c : cands) {
                if (json)
                    arr.push_back({{"t", c.t},
                                   {"residue", c.residue},
                                   {"C", rat_str(c.C)},
                                   {"verified_upto", c.verified_upto}});
                else
                    std::cout << "candidate: restriction mod " << c.t << " residue " << c.residue
                              << " C=" << rat_str(c.C) << " (coefficients verified to q^"
                              << c.verified_upto << "; heuristic, not a theorem)\n";
            }
            if (json) std::cout << arr.dump(2) << "\n";
            if (!json && cands.empty()) std::cout << "no candidates in range\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
