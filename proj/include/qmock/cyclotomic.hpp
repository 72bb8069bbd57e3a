#ifndef QMOCK_CYCLOTOMIC_HPP
#define QMOCK_CYCLOTOMIC_HPP

#include "qmock/rational.hpp"

#include <complex>
#include <vector>

namespace qmock {

// Element of Q(zeta_n), stored as phi(n) rational coordinates in the power
// basis 1, zeta, ..., zeta^{phi(n)-1}, reduced modulo the n-th cyclotomic
// polynomial.  Reduction is canonical, so equality is coefficient equality
// after lifting to a common conductor.  Elements that reduce to a rational
// collapse to conductor 1.
class Cyclo {
public:
    Cyclo() : cond_(1), c_(1, Rational(0)) {}
    explicit Cyclo(const Rational& r) : cond_(1), c_(1, r) {}
    explicit Cyclo(long n) : cond_(1), c_(1, Rational(n)) {}

    // zeta_conductor^power
    static Cyclo root(long conductor, long power);
    // coefficients in the power basis (size phi(conductor))
    static Cyclo from_coeffs(long conductor, std::vector<Rational> coeffs);

    long conductor() const { return cond_; }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_rational() const;
    bool is_one() const { return is_rational() && c_[0] == 1; }
    // requires is_rational()
    const Rational& rational_value() const;

    Cyclo lifted(long m) const;      // m must be a multiple of conductor()
    Cyclo conj() const;              // zeta -> zeta^{-1}
    Cyclo inverse() const;           // throws std::domain_error on zero

    std::complex<double> embed(int precision_bits = 64) const;

    Cyclo operator-() const;
    Cyclo& operator+=(const Cyclo& o);
    Cyclo& operator-=(const Cyclo& o);
    Cyclo& operator*=(const Cyclo& o);

    friend Cyclo operator+(Cyclo a, const Cyclo& b) { a += b; return a; }
    friend Cyclo operator-(Cyclo a, const Cyclo& b) { a -= b; return a; }
    friend Cyclo operator*(Cyclo a, const Cyclo& b) { a *= b; return a; }
    friend bool operator==(const Cyclo& a, const Cyclo& b);
    friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

    std::string str() const;

private:
    long cond_;
    std::vector<Rational> c_;

    void collapse_if_rational();
    static Cyclo reduce_poly(long conductor, std::vector<Rational> poly, bool collapse = true);
};

long euler_phi(long n);
// Coefficients of Phi_n, degree phi(n), monic, integer.
const std::vector<Integer>& cyclotomic_polynomial(long n);

inline Cyclo cyclo_root(long conductor, long power) { return Cyclo::root(conductor, power); }
inline Cyclo cyclo_mul(const Cyclo& a, const Cyclo& b) { return a * b; }
inline std::complex<double> cyclo_embed(const Cyclo& a, int precision_bits = 64) {
    return a.embed(precision_bits);
}

} // namespace qmock

#endif
