#include "qmock/numeric.hpp"

#include <doctest.h>

#include <cmath>

using namespace qmock;

TEST_CASE("incomplete gamma closed forms") {
    // Gamma(1, x) = e^{-x}
    for (double x : {0.05, 0.5, 1.0, 3.7, 15.0})
        CHECK(std::fabs(incomplete_gamma(1.0, x) - std::exp(-x)) < 1e-13 * std::exp(-x) + 1e-16);
    CHECK(std::fabs(incomplete_gamma(1.0, 1.0) - 0.36787944117144233) < 1e-14);
    // Gamma(1/2, 0+) -> sqrt(pi)
    CHECK(std::fabs(incomplete_gamma(0.5, 1e-12) - std::sqrt(M_PI)) < 1e-5);
    // Gamma(2, x) = (x+1) e^{-x}
    for (double x : {0.2, 1.0, 9.0})
        CHECK(std::fabs(incomplete_gamma(2.0, x) - (x + 1) * std::exp(-x)) < 1e-12);
    CHECK_THROWS_AS(incomplete_gamma(0.5, 0.0), NonPositiveX);
    CHECK_THROWS_AS(incomplete_gamma(0.5, -1.0), NonPositiveX);
}

TEST_CASE("incomplete gamma recurrence on the verification grid") {
    CHECK(gamma_recurrence_residual(-0.5, 2.3) < 1e-10);
    VerificationReport rep = verify_gamma_recurrence(1e-10);
    CHECK(rep.passed());
}

TEST_CASE("Lipschitz summation") {
    auto r1 = lipschitz_check({0.0, 1.0}, 2, 10000);
    CHECK(r1.residual < 1e-8);
    auto r2 = lipschitz_check({0.3, 0.7}, 3, 10000);
    CHECK(r2.residual < 1e-9);
    // index shift w -> w+1 leaves the j-sum invariant exactly
    auto a = lipschitz_check({0.3, 0.7}, 4, 4000);
    auto b = lipschitz_check({1.3, 0.7}, 4, 4000);
    CHECK(std::fabs(a.residual - b.residual) < 1e-9);
    CHECK(verify_lipschitz(1e-8).passed());
}

TEST_CASE("adaptive quadrature sanity") {
    auto f = [](double x) { return std::complex<double>(std::sin(x), std::cos(x)); };
    auto v = integrate_adaptive(f, 0.0, M_PI, 1e-12);
    CHECK(std::abs(v - std::complex<double>(2.0, 0.0)) < 1e-10);
}

TEST_CASE("Eichler integral rewriting") {
    DirichletChar k12 = DirichletChar::from_kronecker(12);
    CHECK(eichler_integral_check(k12, {0.0, 1.0}, 20, 1e-10) < 1e-8);
    DirichletChar one = DirichletChar::trivial(1);
    CHECK(eichler_integral_check(one, {0.0, 1.0}, 20, 1e-10) < 1e-8);
    // truncation m <= 1 vs m <= 20 differ below 1e-12 at tau = 2i
    double a = eichler_integral_check(one, {0.0, 2.0}, 1, 1e-10);
    double b = eichler_integral_check(one, {0.0, 2.0}, 20, 1e-10);
    CHECK(std::fabs(a - b) < 1e-12);
    CHECK(verify_eichler(1e-8).passed());
}
