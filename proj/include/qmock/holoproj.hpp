#ifndef QMOCK_HOLOPROJ_HPP
#define QMOCK_HOLOPROJ_HPP

#include "qmock/arith.hpp"

namespace qmock {

struct PoleInParameter : std::runtime_error {
    explicit PoleInParameter(const std::string& m) : std::runtime_error(m) {}
};

// exact half-integer, value = twice/2
struct HalfInteger {
    long twice = 0;
    HalfInteger() = default;
    explicit HalfInteger(long t) : twice(t) {}
    static HalfInteger whole(long n) { return HalfInteger(2 * n); }
    static HalfInteger halves(long t) { return HalfInteger(t); }
    bool is_integer() const { return twice % 2 == 0; }
    long integer_value() const { return twice / 2; }
    Rational value() const { return rat(twice, 2); }
    HalfInteger operator+(const HalfInteger& o) const { return HalfInteger(twice + o.twice); }
    HalfInteger operator-(const HalfInteger& o) const { return HalfInteger(twice - o.twice); }
};

// P_r^{(a,b)}(z): finite hypergeometric sum with all Gamma ratios expanded as
// rising-factorial products, exact over Q
Rational jacobi_poly(long r, HalfInteger a, HalfInteger b, const Rational& z);

// terminating 2F1(a,b,c;z); a or b must be a nonpositive integer
Rational hyp2f1_terminating(HalfInteger a, HalfInteger b, HalfInteger c, const Rational& z);

// the 2F1 route: Gamma(a+r+1)/(r! Gamma(a+1)) 2F1(-r, a+b+r+1, a+1; (1-z)/2)
Rational jacobi_poly_via_2f1(long r, HalfInteger a, HalfInteger b, const Rational& z);

// P_{a,b}(X,Y) = sum_{j=0}^{a-2} C(j+b-2, j) X^j (X+Y)^{a-j-2}
Rational homogeneous_P(long a, HalfInteger b, const Rational& X, const Rational& Y);
// the alternate closed form, valid for b != 1, 2
Rational homogeneous_P_alt(long a, HalfInteger b, const Rational& X, const Rational& Y);

// (n - m)^2 / (2n): value of N^{1/2} P_1^{(-1/2,-2)}(1 - 2M/N) - M^{1/2} at
// M = m^2, N = n^2
Rational defect_factor_theta(long long m, long long n);

// sum_{m>=1} sum_{n-m>=1} chi(m) psi(n) (n-m)^2 q^{n^2 - m^2}; the scalar
// route goes through -Gamma(1-k_f) alpha(m^2) beta(n^2) defect_factor_theta
// with the Gamma(-1/2) pair tracked formally and required to cancel
QSeries projection_defect_series(const DirichletChar& chi, const DirichletChar& psi, long prec);

// floating evaluator of the general defect factor
// n^{k_f - 1} P_{kappa-2}^{(1-k_f, 1-kappa)}(1 - 2m/n) - m^{k_f - 1};
// rejects k_f in N and k_g = kappa - k_f in -N per the projection hypotheses
double projection_defect_term(double kf, long kappa, long m, long n);

// pi_3 cancellation harness: mock_numerator vs defect series (the trivial-chi
// extra term is subtracted from the numerator side before comparison)
VerificationReport verify_pi3_cancellation(const DirichletChar& chi, const DirichletChar& psi,
                                           long prec);

// dual-formula harness for criterion-style randomized checks
VerificationReport verify_jacobi_poly_duality(long max_kappa, long max_degree, long trials,
                                              unsigned long seed);

} // namespace qmock

#endif
