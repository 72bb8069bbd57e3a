#ifndef QMOCK_JACOBI_THETA_HPP
#define QMOCK_JACOBI_THETA_HPP

#include "qmock/numeric.hpp"
#include "qmock/report.hpp"
#include "qmock/twovar.hpp"

namespace qmock {

// Formal unit scalars (i, 2 pi i, Gamma(-1/2)) carried as exponent tags.
// Even powers of i are folded into the series sign at normalization, so a
// normalized tag has i_pow in {0, 1}.  Tags must cancel before any exact
// comparison against an untagged series.
struct UnitTags {
    int i_pow = 0;
    int two_pi_i_pow = 0;
    int gamma_half_pow = 0;
};

// series or product expansion of the Jacobi theta function, exact
// coefficients, tag holding the overall power of i
struct PhasedTwoVar {
    TwoVarSeries series;
    UnitTags tags;

    PhasedTwoVar normalized() const; // fold i^2 = -1 into the series
};

// sum form: i * sum_{nu in Z+1/2} (-1)^{nu-1/2} q^{nu^2/2} zeta^nu
// (the signed half-integer convention pinned by the product side);
// qprec8 bounds exponent numerators in 1/8 units
PhasedTwoVar jacobi_theta_series(long qprec8);
// product form: -i zeta^{-1/2} q^{1/8} prod (1-q^{j+1})(1-zeta q^j)(1-zeta^{-1} q^{j+1})
PhasedTwoVar jacobi_theta_product(long qprec8);

// z -> z + lambda tau + mu applied to a theta-layout series (xden 2, qden 8)
TwoVarSeries theta_z_shift(const TwoVarSeries& f, long lambda, long mu);

// residue D1 and (-2)-nd coefficient D2 of 1/theta(z;tau)^2 in zhat = 2 pi i z
struct LaurentData {
    QSeries D1;
    QSeries D2;
    int zhat_unit_pow = 1; // D_k multiplies (2 pi i z)^{-k}
};
LaurentData theta_reciprocal_laurent(int orderK, long qprec8);

std::complex<double> eval_theta_numeric(std::complex<double> z, std::complex<double> tau,
                                        double tail_eps = 1e-15);

// |D1 sum q^{n^2} + 2 D2 sum n q^{n^2} - int e^{2 pi i (2t)} / theta(t - tau/2)^2 dt|
double prop_ii_residual(std::complex<double> tau, double quad_tol, long qprec8 = 480);

VerificationReport verify_triple_product(long qexp);  // up to q^qexp, all zeta powers
VerificationReport verify_elliptic_transform(long qexp);
VerificationReport verify_prop_ii(std::complex<double> tau, double tol, double quad_tol);

} // namespace qmock

#endif
