// Acceptance suite: one line per criterion, exit 0 only if every criterion
// holds.  Parameters and tolerances are pinned here, not configurable.
#include "qmock/appell.hpp"
#include "qmock/holoproj.hpp"
#include "qmock/jacobi_theta.hpp"
#include "qmock/parallel.hpp"

#include <chrono>
#include <cstring>
#include <iostream>
#include <random>
#include <set>

using namespace qmock;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void criterion(int n, bool ok, const std::string& what, double secs,
               const std::string& detail = "") {
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << ": " << what << " ["
              << (int)(secs * 1000) << " ms]";
    if (!detail.empty()) std::cout << " -- " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
}

bool want(int n, int argc, char** argv) {
    for (int i = 1; i + 1 < argc; ++i) {
        if (std::strcmp(argv[i], "--only") == 0 && std::stoi(argv[i + 1]) != n) return false;
        if (std::strcmp(argv[i], "--skip") == 0 && std::stoi(argv[i + 1]) == n) return false;
    }
    return true;
}

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

} // namespace

int main(int argc, char** argv) {
    int threads = default_thread_count();
    bool c2_pass = false, c6_pass = false, c9_pass = false;
    bool surrogates_ran = false;

    // 1. Hurwitz class number identity, 8n <= 800, exact, independent paths.
    if (want(1, argc, argv)) {
        Timer t;
        VerificationReport rep = verify_hurwitz_identity(800, threads);
        DirichletChar one = DirichletChar::trivial(1);
        DirichletChar m4 = DirichletChar::from_kronecker(-4);
        bool anchors = sigma_small_2(one, m4, 8) == Cyclo(Rational(-4)) &&
                       sigma_small_2(one, m4, 16) == Cyclo(Rational(4));
        criterion(1, rep.passed() && anchors && t.seconds() < 10.0,
                  "sigma2(8n) = -4 sum (-1)^{j-1}(2j-1) H(8n-(2j-1)^2), 8n <= 800", t.seconds(),
                  rep.passed() ? "" : rep.witness);
    }

    // 2. pi_3 cancellation to q^2000: divisor enumeration vs lattice double sum.
    if (want(2, argc, argv)) {
        Timer t;
        bool ok = true;
        std::string detail;
        std::vector<std::pair<std::string, std::string>> pairs = {
            {"trivial:1", "kronecker:-4"},
            {"kronecker:12", "kronecker:-4"},
            {"kronecker:12", "kronecker:-8"},
            {"kronecker:12", "kronecker:-3"},
        };
        for (const auto& [cs, ps] : pairs) {
            VerificationReport rep = verify_pi3_cancellation(DirichletChar::parse(cs),
                                                             DirichletChar::parse(ps), 2000);
            if (!rep.passed()) {
                ok = false;
                detail = cs + " x " + ps + ": " + rep.witness;
                break;
            }
        }
        c2_pass = ok && t.seconds() < 30.0;
        surrogates_ran = true;
        criterion(2, c2_pass, "mock numerator = projection defect series to q^2000 (4 pairs)",
                  t.seconds(), detail);
    }

    // 3. Theorem-style p-adic congruences, (p,a,b) in {3,5,7}x{1,2}^2, prec 2000,
    //    F variant (chi = kronecker:12) and G variant (chi = trivial:1).
    if (want(3, argc, argv)) {
        Timer t;
        DirichletChar m4 = DirichletChar::from_kronecker(-4);
        DirichletChar k12 = DirichletChar::from_kronecker(12);
        DirichletChar one = DirichletChar::trivial(1);
        const long prec = 2000;
        QSeries plusF = mock_plus_part(k12, m4, prec);
        QSeries plusG = mock_plus_part(one, m4, prec);
        bool ok = true;
        std::string first_witness;
        int checked = 0, passed = 0;
        for (long p : {3L, 5L, 7L}) {
            for (int a = 1; a <= 2; ++a) {
                for (int b = 1; b <= 2; ++b) {
                    for (int variant = 0; variant < 2; ++variant) {
                        VerificationReport rep = padic_congruence_check_with(
                            variant == 0 ? plusF : plusG, m4, variant == 0 ? k12 : one, p, a, b,
                            prec);
                        ++checked;
                        std::cout << "    " << rep.line() << "\n";
                        if (rep.passed())
                            ++passed;
                        else if (ok) {
                            ok = false;
                            first_witness = rep.witness;
                        }
                    }
                }
            }
        }
        criterion(3, ok && t.seconds() < 120.0,
                  "U(p^b) images of theta(p^{2a} tau) * plus part divisible by p^{min(a,b)} (" +
                      std::to_string(passed) + "/" + std::to_string(checked) + " configurations)",
                  t.seconds(), ok ? "" : "first: " + first_witness);
    }

    // 4. Appell-Lerch rewriting, psi = chi_{-4}, chi = kronecker:8, to q^300.
    if (want(4, argc, argv)) {
        Timer t;
        VerificationReport rep = verify_alprop(DirichletChar::from_kronecker(8),
                                               DirichletChar::from_kronecker(-4), 300, threads);
        criterion(4, rep.passed() && t.seconds() < 60.0,
                  "sigma2 series = double character sum of A_1 specializations to q^300",
                  t.seconds(), rep.witness);
    }

    // 5. Partial theta extraction to q^100 with the branch anatomy.
    if (want(5, argc, argv)) {
        Timer t;
        VerificationReport rep = verify_partial_theta(100);
        criterion(5, rep.passed(), "x^{-2} extraction of the A_2 kernel is -sum q^{n^2} to q^100",
                  t.seconds(), rep.witness);
    }

    // 6. Reciprocal theta Laurent data vs contour integral; D1 reported.
    if (want(6, argc, argv)) {
        Timer t;
        double r1 = prop_ii_residual({0.0, 1.0}, 1e-10);
        double r2 = prop_ii_residual({0.0, 2.0}, 1e-10);
        LaurentData d = theta_reciprocal_laurent(4, 8 * 52);
        std::cout << "    D1 to q-precision 50: " << (d.D1.known_zero() ? "identically 0" : d.D1.str(6))
                  << " (reported, not asserted)\n";
        c6_pass = r1 < 1e-8 && r2 < 1e-8;
        criterion(6, c6_pass,
                  "D1 sum q^{n^2} + 2 D2 sum n q^{n^2} = contour integral (tau = i, 2i)",
                  t.seconds(),
                  "residuals " + sci(r1) + ", " + sci(r2));
    }

    // 7. Triple product to q^20 over all zeta powers; elliptic transforms.
    if (want(7, argc, argv)) {
        Timer t;
        VerificationReport a = verify_triple_product(20);
        VerificationReport b = verify_elliptic_transform(16);
        criterion(7, a.passed() && b.passed(),
                  "theta sum convention = product expansion; elliptic transformation identities",
                  t.seconds(), a.passed() ? b.witness : a.witness);
    }

    // 8. Jacobi polynomial machinery: dual formulas, 100 random arguments per
    //    configuration, fixed seed.
    if (want(8, argc, argv)) {
        Timer t;
        VerificationReport rep = verify_jacobi_poly_duality(8, 10, 100, 20240901);
        bool extra = true;
        std::mt19937_64 rng(20240901);
        std::uniform_int_distribution<long> zden(2, 23);
        for (long r = 0; r <= 10 && extra; ++r) {
            for (long a2 : {-1L, 1L, 3L}) {
                for (long b2 : {-4L, -1L, 3L}) {
                    for (int k = 0; k < 100; ++k) {
                        long dn = zden(rng);
                        std::uniform_int_distribution<long> znum(-dn + 1, dn - 1);
                        Rational z = rat(znum(rng), dn);
                        HalfInteger a = HalfInteger::halves(a2), b = HalfInteger::halves(b2);
                        if (jacobi_poly(r, a, b, z) != jacobi_poly_via_2f1(r, a, b, z)) {
                            extra = false;
                            break;
                        }
                    }
                }
            }
        }
        criterion(8, rep.passed() && extra,
                  "P_r^{(a,b)} finite sum vs 2F1 form (r <= 10) and vs homogeneous P (kappa <= 8)",
                  t.seconds(), rep.witness);
    }

    // 9. Numeric lemma checks: Lipschitz, incomplete-Gamma recurrence, Eichler.
    if (want(9, argc, argv)) {
        Timer t;
        VerificationReport lip = verify_lipschitz(1e-8);
        VerificationReport gam = verify_gamma_recurrence(1e-10);
        VerificationReport eic = verify_eichler(1e-8);
        c9_pass = lip.passed() && gam.passed() && eic.passed();
        std::string detail;
        detail = "residuals: lipschitz " + sci(*lip.residual) + ", gamma " +
                 sci(*gam.residual) + ", eichler " + sci(*eic.residual);
        criterion(9, c9_pass, "Lipschitz (r=2,3,4) < 1e-8; Gamma recurrence < 1e-10; Eichler < 1e-8",
                  t.seconds(), detail);
    }

    // 10. The modularity statements themselves are not desk-reproducible; their
    //     acceptance surrogate is criteria 2, 6, and 9.
    if (want(10, argc, argv)) {
        if (surrogates_ran && want(6, argc, argv) && want(9, argc, argv)) {
            criterion(10, c2_pass && c6_pass && c9_pass,
                      "surrogate bundle: criteria 2, 6, 9 stand in for the modularity statements",
                      0.0);
        } else {
            // criteria filtered out: recompute a reduced surrogate bundle
            Timer t;
            bool ok = true;
            for (const auto& [cs, ps] : std::vector<std::pair<std::string, std::string>>{
                     {"trivial:1", "kronecker:-4"}, {"kronecker:12", "kronecker:-4"}}) {
                if (!verify_pi3_cancellation(DirichletChar::parse(cs), DirichletChar::parse(ps),
                                             600)
                         .passed())
                    ok = false;
            }
            if (prop_ii_residual({0.0, 1.0}, 1e-10) >= 1e-8) ok = false;
            if (!verify_lipschitz(1e-8).passed() || !verify_gamma_recurrence(1e-10).passed() ||
                !verify_eichler(1e-8).passed())
                ok = false;
            criterion(10, ok, "surrogate bundle (coefficient identities + integral rewritings)",
                      t.seconds());
        }
    }

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
