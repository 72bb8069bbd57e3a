#ifndef QMOCK_NUMERIC_HPP
#define QMOCK_NUMERIC_HPP

#include "qmock/character.hpp"
#include "qmock/report.hpp"

#include <complex>
#include <functional>

namespace qmock {

struct NonPositiveX : std::runtime_error {
    explicit NonPositiveX(const std::string& m) : std::runtime_error(m) {}
};
struct QuadratureFailure : std::runtime_error {
    explicit QuadratureFailure(const std::string& m) : std::runtime_error(m) {}
};

// upper incomplete Gamma(s, x), x > 0, real s (integers and half-integers in
// particular); >= 12 significant digits on the verification grid
double incomplete_gamma(double s, double x);

// |Gamma(s+1,x) - s Gamma(s,x) - x^s e^{-x}|
double gamma_recurrence_residual(double s, double x);

struct LipschitzResult {
    double residual;
    double tail_bound; // Euler-Maclaurin remainder estimate for the j-sum
};
// sum_j 1/(w+j)^r vs ((-2 pi i)^r/(r-1)!) sum_{j>=1} j^{r-1} e^{2 pi i j w}
LipschitzResult lipschitz_check(std::complex<double> w, int r, long terms);

// adaptive Simpson for complex integrands on a real interval
std::complex<double> integrate_adaptive(const std::function<std::complex<double>(double)>& f,
                                        double a, double b, double tol, int max_depth = 48);

// |quadrature of (i/(pi sqrt 2)) int theta_chi(w) (-i(w+tau))^{-3/2} dw
//  - incomplete-Gamma series|, with the -1/(2 pi v^{1/2}) constant part for
//  the modulus-1 character
double eichler_integral_check(const DirichletChar& chi, std::complex<double> tau, int trunc_m,
                              double quad_tol);

VerificationReport verify_lipschitz(double tol);
VerificationReport verify_gamma_recurrence(double tol);
VerificationReport verify_eichler(double tol);

} // namespace qmock

#endif
