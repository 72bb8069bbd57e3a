#ifndef QMOCK_RATIONAL_HPP
#define QMOCK_RATIONAL_HPP

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qmock {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Accepts "p", "p/q", optional sign.
inline Rational parse_rational(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    if (r.get_den() < 0)
        throw std::invalid_argument("negative denominator: " + s);
    return r;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

inline Integer floor_div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

// floor(r)
inline Integer rat_floor(const Rational& r) {
    return floor_div(r.get_num(), r.get_den());
}

inline Integer rat_ceil(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    return q;
}

inline Rational rat_pow(const Rational& r, long e) {
    if (e == 0) return Rational(1);
    Rational base = e > 0 ? r : Rational(1) / r;
    unsigned long k = e > 0 ? e : -e;
    Rational acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

// p-adic valuation of a nonzero rational; p prime.
inline long padic_valuation(const Rational& r, long p) {
    if (r == 0) throw std::invalid_argument("padic_valuation of zero");
    long v = 0;
    Integer n = r.get_num();
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++v;
    }
    Integer d = r.get_den();
    while (mpz_divisible_ui_p(d.get_mpz_t(), p)) {
        mpz_divexact_ui(d.get_mpz_t(), d.get_mpz_t(), p);
        --v;
    }
    return v;
}

inline long lcm_long(long a, long b) {
    Integer l;
    Integer ia(a), ib(b);
    mpz_lcm(l.get_mpz_t(), ia.get_mpz_t(), ib.get_mpz_t());
    if (!l.fits_slong_p()) throw std::overflow_error("lcm overflow");
    return l.get_si();
}

inline long gcd_long(long a, long b) {
    while (b) { long t = a % b; a = b; b = t; }
    return a < 0 ? -a : a;
}

} // namespace qmock

#endif
