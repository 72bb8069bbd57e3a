#include "qmock/jacobi_theta.hpp"

#include <doctest.h>

#include <cmath>

using namespace qmock;

TEST_CASE("theta sum and product expansions agree (triple product)") {
    CHECK(verify_triple_product(20).passed());
}

TEST_CASE("theta specializations") {
    PhasedTwoVar th = jacobi_theta_series(8 * 20);
    // zeta = 1 (z = 0): theta vanishes identically
    QSeries at_one = QSeries::zero(8 * 20, 8);
    for (const auto& [k, comp] : th.series.components()) {
        (void)k;
        at_one += comp;
    }
    CHECK(at_one.known_zero());
    // zeta -> zeta^{-1} negates the series
    CHECK(TwoVarSeries::equal_to_shared_prec(th.series.x_inverted(), -th.series));
}

TEST_CASE("elliptic transformation as an exact identity") {
    CHECK(verify_elliptic_transform(16).passed());
}

TEST_CASE("numeric theta evaluation") {
    using C = std::complex<double>;
    C tau(0, 1);
    CHECK(std::abs(eval_theta_numeric(C(0, 0), tau)) < 1e-14);
    // oddness
    for (C z : {C(0.17, 0.05), C(0.4, -0.2), C(0.25, 0.0)})
        CHECK(std::abs(eval_theta_numeric(z, tau) + eval_theta_numeric(-z, tau)) < 1e-13);
    // numeric product formula at z = 1/4, tau = i
    C z(0.25, 0);
    C q = std::exp(C(0, 2 * M_PI) * tau);
    C zeta = std::exp(C(0, 2 * M_PI) * z);
    C prod = -C(0, 1) * std::pow(zeta, -0.5) * std::pow(q, 0.125);
    for (int j = 0; j < 60; ++j) {
        prod *= (1.0 - std::pow(q, j + 1.0));
        prod *= (1.0 - zeta * std::pow(q, (double)j));
        prod *= (1.0 - std::pow(q, j + 1.0) / zeta);
    }
    CHECK(std::abs(eval_theta_numeric(z, tau) - prod) < 1e-12);
}

TEST_CASE("reciprocal theta Laurent data") {
    LaurentData d = theta_reciprocal_laurent(4, 8 * 52);
    CHECK(d.D1.known_zero()); // reported as zero to this precision
    CHECK(d.D2.leading_exponent() == Rational(-1, 4));
    // D2 * (zhat coefficient of theta)^2 = 1; the zhat coefficient is i * s1
    // so the square contributes a sign
    QSeriesBuilder s1b(8, 8 * 52);
    for (long t = 1; t * t < 8 * 52; t += 2) {
        long sgn = ((t - 1) / 2) % 2 == 0 ? 1 : -1;
        s1b.add(t * t, Cyclo(Rational(sgn * t))); // 2 * nu * sign, nu = t/2
    }
    QSeries s1 = s1b.build();
    QSeries prod = d.D2 * (s1 * s1).scaled(Cyclo(Rational(-1)));
    QSeries one = QSeries::monomial(Cyclo(Rational(1)), 0, prod.den(), prod.prec());
    CHECK(QSeries::equal_to_shared_prec(prod, one));
}

TEST_CASE("Laurent data against the contour integral, numerically") {
    CHECK(prop_ii_residual({0.0, 1.0}, 1e-10) < 1e-8);
    CHECK(prop_ii_residual({0.0, 2.0}, 1e-10) < 1e-10);
    // conjugate symmetry of the integrand for purely imaginary tau
    using C = std::complex<double>;
    C tau(0, 1.0);
    for (double t : {0.1, 0.27, 0.44}) {
        C a = eval_theta_numeric(C(t, 0) - 0.5 * tau, tau);
        C b = eval_theta_numeric(C(-t, 0) - 0.5 * tau, tau);
        C ia = std::exp(C(0, 4 * M_PI) * t) / (a * a);
        C ib = std::exp(C(0, -4 * M_PI) * t) / (b * b);
        CHECK(std::abs(ia - std::conj(ib)) < 1e-12);
    }
}

TEST_CASE("prop-ii harness") {
    auto rep = verify_prop_ii({0.0, 1.0}, 1e-8, 1e-10);
    CHECK(rep.passed());
    CHECK(rep.params.at("D1").find("0") == 0);
}
