#ifndef QMOCK_APPELL_HPP
#define QMOCK_APPELL_HPP

#include "qmock/arith.hpp"
#include "qmock/twovar.hpp"

namespace qmock {

struct PoleAtSpecialization : std::runtime_error {
    explicit PoleAtSpecialization(const std::string& m) : std::runtime_error(m) {}
};
struct TruncationBoundExceeded : std::runtime_error {
    explicit TruncationBoundExceeded(const std::string& m) : std::runtime_error(m) {}
};

// argument mu*tau + nu at which a Jacobi variable is specialized
struct TorsionPoint {
    Rational mu;
    Rational nu;
    TorsionPoint() = default;
    TorsionPoint(Rational m, Rational n) : mu(std::move(m)), nu(std::move(n)) {}
};

// (D_z^j A_ell)(w, z; tau) with w, z torsion points in the sum's own tau:
//   e^{pi i ell w} sum_n n^j (-1)^{ell n} q^{ell n(n+1)/2} e^{2 pi i n z}
//                         / (1 - e^{2 pi i w} q^n)
// Each denominator is expanded geometrically in the direction that makes the
// expansion exponent positive; the n-range is derived from the quadratic
// exponent growth so that every emitted coefficient below prec is complete.
QSeries appell_lerch_specialized(int ell, int j, const TorsionPoint& w, const TorsionPoint& z,
                                 const Rational& prec);

// direct numeric summation of the defining display (oracle for tests)
std::complex<double> appell_lerch_numeric(int ell, int j, std::complex<double> w,
                                          std::complex<double> z, std::complex<double> tau,
                                          int nmax);

// Proposition-style rewriting of the sigma2 generating function as a double
// character sum of A_1 specializations; exact comparison to q^prec
VerificationReport verify_alprop(const DirichletChar& chi, const DirichletChar& psi, long prec,
                                 int threads = 1);

// A_2(t - tau/2, 0; tau) expanded in x = e^{2 pi i t}; branch selects the
// n >= 1 / n = 0 / n <= -1 part of the defining sum (0 = all)
enum class A2Branch { All, Positive, Zero, Negative };
TwoVarSeries appell_a2_kernel(long qprec2, A2Branch branch = A2Branch::All);

// x^{-2} Fourier coefficient of the kernel: J(tau) = -sum_{n>=1} q^{n^2}
QSeries partial_theta_extraction(long prec);

VerificationReport verify_partial_theta(long prec);

} // namespace qmock

#endif
