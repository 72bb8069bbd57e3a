#include "qmock/arith.hpp"

#include <doctest.h>

#include <cmath>

using namespace qmock;

namespace {

// independent Hurwitz oracle: enumerate |b| <= a <= c with the b >= 0
// boundary convention stated via absolute values; distinct formulation from
// the implementation's -a < b <= a loop
Rational hurwitz_oracle(long long n) {
    if (n == 0) return Rational(-1, 12);
    if (n % 4 == 1 || n % 4 == 2) return Rational(0);
    Rational h(0);
    for (long long b = 0; b * b <= n; ++b) {
        if ((b * b + n) % 4) continue;
        long long ac = (b * b + n) / 4;
        for (long long a = std::max<long long>(b, 1); a * a <= ac; ++a) {
            if (ac % a) continue;
            long long c = ac / a;
            // count (a, b, c) and (a, -b, c) when distinct and both reduced
            int mult = (b == 0 || b == a || a == c) ? 1 : 2;
            if (a == b && b == c)
                h += Rational(1, 3);
            else if (b == 0 && a == c)
                h += Rational(1, 2);
            else
                h += mult;
        }
    }
    return h;
}

// brute-force sigma oracle over all divisor pairs, trial division from the
// large side
long long sigma2_oracle(const DirichletChar& chi, const DirichletChar& psi, long long n) {
    long long acc = 0;
    for (long long e = 1; e <= n; ++e) {
        if (n % e) continue;
        long long d = n / e;
        if (d > e || (d + e) % 2) continue; // d <= n/d = e, equal parity
        acc += chi.sign_at((e - d) / 2) * psi.sign_at((e + d) / 2) * d * d;
    }
    return acc;
}

} // namespace

TEST_CASE("small divisor sets") {
    CHECK(small_divisor_set(1).divisors == std::vector<long long>{1});
    CHECK(small_divisor_set(12).divisors == std::vector<long long>{2});
    CHECK(small_divisor_set(9).divisors == std::vector<long long>{1, 3});
    CHECK(small_divisor_set(2).divisors.empty());
    for (long long n = 2; n < 500; n += 4)
        CHECK(small_divisor_set(n).divisors.empty()); // n = 2 mod 4
}

TEST_CASE("congruent small divisor sets") {
    CHECK(congruent_small_divisor_set(8, 3, 1).divisors == std::vector<long long>{2});
    CHECK(congruent_small_divisor_set(1, 3, 1).divisors.empty());
    CHECK_THROWS_AS(congruent_small_divisor_set(8, 4, 1), std::invalid_argument);
}

TEST_CASE("sigma_small_1 values") {
    DirichletChar m3 = DirichletChar::from_kronecker(-3);
    DirichletChar m4 = DirichletChar::from_kronecker(-4);
    CHECK(sigma_small_1(m3, 3) == Cyclo(Rational(-1)));
    CHECK(sigma_small_1(m3, 1).is_zero()); // argument 0
    // for odd n both divisors are odd, the argument ((n/d)^2-d^2)/4 is even,
    // and chi_{-4} kills the term; even divisor pairs can contribute
    for (long long n = 1; n <= 500; n += 2)
        CHECK(sigma_small_1(m4, n).is_zero());
    CHECK(sigma_small_1(m4, 8) == Cyclo(Rational(-2))); // d = 2: psi(3) * 2
    // brute-force oracle sweep
    for (long long n = 1; n <= 300; ++n) {
        long long acc = 0;
        for (long long e = 1; e <= n; ++e) {
            if (n % e) continue;
            long long d = n / e;
            if (d > e || (d + e) % 2) continue;
            acc += m4.sign_at((e * e - d * d) / 4) * d;
        }
        CHECK(sigma_small_1(m4, n).rational_value() == Rational((long)acc));
    }
    CHECK_THROWS_AS(sigma_small_1(DirichletChar::trivial(1), 5), std::invalid_argument);
}

TEST_CASE("sigma_small_2 values and oracle sweep") {
    DirichletChar one = DirichletChar::trivial(1);
    DirichletChar m4 = DirichletChar::from_kronecker(-4);
    CHECK(sigma_small_2(one, m4, 8) == Cyclo(Rational(-4)));
    CHECK(sigma_small_2(one, m4, 16) == Cyclo(Rational(4)));
    CHECK(sigma_small_2(one, m4, 2).is_zero());
    DirichletChar k12 = DirichletChar::from_kronecker(12);
    for (long long n = 1; n <= 400; ++n) {
        CHECK(sigma_small_2(one, m4, n).rational_value() == Rational((long)sigma2_oracle(one, m4, n)));
        CHECK(sigma_small_2(k12, m4, n).rational_value() == Rational((long)sigma2_oracle(k12, m4, n)));
    }
    CHECK_THROWS_AS(sigma_small_2(one, DirichletChar::from_kronecker(12), 8), OddnessViolation);
}

TEST_CASE("Hurwitz class numbers") {
    CHECK(hurwitz_class_number(0) == Rational(-1, 12));
    CHECK(hurwitz_class_number(3) == Rational(1, 3));
    CHECK(hurwitz_class_number(4) == Rational(1, 2));
    CHECK(hurwitz_class_number(7) == Rational(1));
    CHECK(hurwitz_class_number(15) == Rational(2));
    CHECK(hurwitz_class_number(23) == Rational(3));
    for (long long n = 0; n <= 600; ++n) {
        Rational h = hurwitz_class_number(n);
        CHECK(h == hurwitz_oracle(n));
        if (n % 4 == 1 || n % 4 == 2) CHECK(h == 0);
        if (n > 0) CHECK(h >= 0);
        Rational twelve = h * 12;
        CHECK(is_integral(twelve)); // 12 H(n) is an integer
    }
}

TEST_CASE("theta series") {
    DirichletChar m4 = DirichletChar::from_kronecker(-4);
    QSeries t = theta_series(m4, 60);
    CHECK(t.coeff_int(1) == Cyclo(Rational(1)));
    CHECK(t.coeff_int(9) == Cyclo(Rational(-3)));
    CHECK(t.coeff_int(25) == Cyclo(Rational(5)));
    CHECK(t.coeff_int(49) == Cyclo(Rational(-7)));
    CHECK(t.coeff_int(4).is_zero());

    QSeries t1 = theta_series(DirichletChar::trivial(1), 30);
    CHECK(t1.coeff_int(0) == Cyclo(Rational(1, 2)));
    CHECK(t1.coeff_int(1) == Cyclo(Rational(1)));
    CHECK(t1.coeff_int(4) == Cyclo(Rational(1)));
    CHECK(t1.coeff_int(9) == Cyclo(Rational(1)));

    // even non-trivial characters have no constant term
    QSeries t12 = theta_series(DirichletChar::from_kronecker(12), 30);
    CHECK(t12.coeff_int(0).is_zero());
    CHECK(t12.coeff_int(1) == Cyclo(Rational(1)));

    // U(3) picks the n^2 = 0 mod 3 exponents: 9 -> 3 carries -3
    QSeries u3 = theta_series(m4, 120).u_operator(3);
    CHECK(u3.coeff_int(3) == Cyclo(Rational(-3)));
    CHECK(u3.coeff_int(1).is_zero());
    CHECK(u3.coeff_int(27) == Cyclo(Rational(9))); // 81 = 9^2, psi(9) = 1
}

TEST_CASE("mock numerator and plus part") {
    DirichletChar one = DirichletChar::trivial(1);
    DirichletChar m4 = DirichletChar::from_kronecker(-4);
    QSeries num = mock_numerator(one, m4, 120);
    CHECK(num.coeff_int(8) == Cyclo(Rational(-4)));
    CHECK(num.coeff_int(1) == Cyclo(Rational(1, 2))); // the (1/2) psi(1) 1^2 term
    QSeries plus = mock_plus_part(one, m4, 120);
    // round trip: plus * theta = numerator
    CHECK(QSeries::equal_to_shared_prec(plus * theta_series(m4, 120), num));
    CHECK(plus.coeff_int(0) == Cyclo(Rational(1, 2)));

    DirichletChar k12 = DirichletChar::from_kronecker(12);
    QSeries numF = mock_numerator(k12, m4, 120);
    CHECK(numF.coeff_int(1).is_zero()); // no extra term for non-trivial chi
    QSeries plusF = mock_plus_part(k12, m4, 120);
    CHECK(QSeries::equal_to_shared_prec(plusF * theta_series(m4, 120), numF));
    CHECK(plusF.coeff_int(7) == Cyclo(Rational(-4)));
    CHECK(plusF.coeff_int(15) == Cyclo(Rational(-12)));
}

TEST_CASE("sigma2 vanishes when the divisor set is empty") {
    DirichletChar one = DirichletChar::trivial(1);
    DirichletChar m4 = DirichletChar::from_kronecker(-4);
    for (long long n = 2; n < 300; n += 4)
        CHECK(sigma_small_2(one, m4, n).is_zero());
}

TEST_CASE("congruent divisor sum: divisor route equals lattice route") {
    DirichletChar one = DirichletChar::trivial(1);
    DirichletChar m4 = DirichletChar::from_kronecker(-4);
    DirichletChar k12 = DirichletChar::from_kronecker(12);
    for (long p : {3L, 5L}) {
        for (int a = 1; a <= 2; ++a) {
            for (long long r = 1; r <= 300; ++r) {
                CHECK(congruent_sigma_divisor(one, m4, r, p, a) ==
                      congruent_sigma_lattice(one, m4, r, p, a));
                CHECK(congruent_sigma_divisor(k12, m4, r, p, a) ==
                      congruent_sigma_lattice(k12, m4, r, p, a));
            }
        }
    }
    // a = 0 would reduce to sigma_small_2; the p-free analogue is covered by
    // the double-sum identity in the holoproj tests
}

TEST_CASE("hurwitz identity harness") {
    VerificationReport rep = verify_hurwitz_identity(800, 2);
    CHECK(rep.passed());
    // spot anchors from the corollary
    DirichletChar one = DirichletChar::trivial(1);
    DirichletChar m4 = DirichletChar::from_kronecker(-4);
    CHECK(sigma_small_2(one, m4, 8) == Cyclo(Rational(-4)));
    CHECK(sigma_small_2(one, m4, 16) == Cyclo(Rational(4)));
}

TEST_CASE("padic congruence harness: verified behavior") {
    DirichletChar m4 = DirichletChar::from_kronecker(-4);
    DirichletChar k12 = DirichletChar::from_kronecker(12);
    // p = 3 with 3 | M_chi passes
    CHECK(padic_congruence_check(m4, k12, 3, 1, 1, 600).passed());
    CHECK(padic_congruence_check(m4, k12, 3, 2, 2, 600).passed());
    // the G variant fails at its leading coefficient: the constant term 1/2 of
    // the plus part lands on q^{p^{2a-b}} with p-adic valuation 0
    VerificationReport g = padic_congruence_check(m4, DirichletChar::trivial(1), 3, 1, 1, 600);
    CHECK_FALSE(g.passed());
    CHECK(g.witness.find("q^3") != std::string::npos);
    // p = 5 fails even for the F variant (no p | M_chi structure)
    CHECK_FALSE(padic_congruence_check(m4, k12, 5, 1, 1, 600).passed());

    CHECK_THROWS_AS(padic_congruence_check(m4, k12, 4, 1, 1, 100), std::invalid_argument);
}
