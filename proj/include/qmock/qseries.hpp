#ifndef QMOCK_QSERIES_HPP
#define QMOCK_QSERIES_HPP

#include "qmock/cyclotomic.hpp"

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qmock {

struct NonUnitLeading : std::runtime_error {
    explicit NonUnitLeading(const std::string& m) : std::runtime_error(m) {}
};
struct ZeroDivisor : std::runtime_error {
    explicit ZeroDivisor(const std::string& m) : std::runtime_error(m) {}
};
struct FractionalExponents : std::runtime_error {
    explicit FractionalExponents(const std::string& m) : std::runtime_error(m) {}
};

// Truncated series in q^{1/den} with exact cyclotomic coefficients.
//
// Coefficients are stored for exponent numerators offset <= e < prec; every
// exponent below offset is an exact zero and everything at prec or above is
// unknown.  All operations compute the guaranteed precision of their result,
// so a coefficient read inside the precision window is always provably
// complete.
class QSeries {
public:
    QSeries() : den_(1), offset_(0), prec_(0) {}

    static QSeries zero(long prec, long den = 1);
    static QSeries one(long prec);
    // a * q^{expo/den}, known below prec/den
    static QSeries monomial(const Cyclo& a, long expo, long den, long prec);

    long den() const { return den_; }
    long offset() const { return offset_; }
    long prec() const { return prec_; }
    const std::vector<Cyclo>& coeffs() const { return c_; }

    bool known_zero() const; // identically zero on the known range
    // exponent numerator of first nonzero coefficient (in den units)
    std::optional<long> leading_exponent_num() const;
    std::optional<Rational> leading_exponent() const;

    // coefficient at exponent e (rational); throws if e >= prec/den
    Cyclo coeff(const Rational& e) const;
    Cyclo coeff_num(long e_num) const; // e_num in den units
    Cyclo coeff_int(long e) const { return coeff(Rational(e)); }

    QSeries with_den(long d) const;        // d must be a multiple of den
    QSeries canonicalized() const;         // minimal den
    QSeries truncated(long prec_num) const;

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    friend QSeries operator+(QSeries a, const QSeries& b) { a += b; return a; }
    friend QSeries operator-(QSeries a, const QSeries& b) { a -= b; return a; }
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    QSeries operator-() const;
    QSeries scaled(const Cyclo& s) const;
    QSeries shifted(long e_num) const;     // multiply by q^{e_num/den}

    friend QSeries qs_div(const QSeries& a, const QSeries& b);

    QSeries u_operator(long p) const;      // alpha(n) -> alpha(pn); needs den == 1
    QSeries v_operator(long m) const;      // q -> q^m
    QSeries rescale_exponents(const Rational& s) const; // exponent e -> s*e

    // keep only exponents with numerator == r (mod m); den must be 1
    QSeries restricted_mod(long m, long r) const;

    // exact equality on the shared known range; returns the first differing
    // exponent if any
    static std::optional<Rational> first_mismatch(const QSeries& a, const QSeries& b);
    static bool equal_to_shared_prec(const QSeries& a, const QSeries& b);
    // shared known range as numerator bound over the unified den
    static Rational shared_prec(const QSeries& a, const QSeries& b);

    std::complex<double> eval(const std::complex<double>& tau) const;

    std::string str(long max_terms = 12) const;

private:
    long den_;
    long offset_;
    long prec_;
    std::vector<Cyclo> c_; // size prec_ - offset_

    void trim_leading_zeros();
    static void unify(QSeries& a, QSeries& b);
    friend class QSeriesBuilder;
};

// Accumulates (exponent, coefficient) pairs, then freezes them into a series.
class QSeriesBuilder {
public:
    QSeriesBuilder(long den, long prec_num) : den_(den), prec_(prec_num) {}
    void add(long e_num, const Cyclo& v);
    QSeries build() const;

private:
    long den_;
    long prec_;
    std::map<long, Cyclo> m_;
};

// B = floor(k*m/12), m = N prod_{p|N} (1 + 1/p)
long sturm_bound(const Rational& weight, long level);

inline QSeries qs_add(const QSeries& a, const QSeries& b) { return a + b; }
inline QSeries qs_mul(const QSeries& a, const QSeries& b) { return a * b; }
inline QSeries qs_u_operator(const QSeries& f, long p) { return f.u_operator(p); }
inline QSeries qs_v_operator(const QSeries& f, long m) { return f.v_operator(m); }

} // namespace qmock

#endif
