#ifndef QMOCK_TWOVAR_HPP
#define QMOCK_TWOVAR_HPP

#include "qmock/qseries.hpp"

#include <map>

namespace qmock {

struct OutOfRange : std::runtime_error {
    explicit OutOfRange(const std::string& m) : std::runtime_error(m) {}
};

// Truncated Laurent series in an auxiliary unit-circle variable x whose
// coefficients are QSeries.  x-exponents live in (1/xden) Z and are keyed by
// numerator.  All component series share den and prec.
class TwoVarSeries {
public:
    TwoVarSeries(long xden, long qden, long qprec)
        : xden_(xden), qden_(qden), qprec_(qprec) {}

    long xden() const { return xden_; }
    long qden() const { return qden_; }
    long qprec() const { return qprec_; }

    bool empty() const { return comp_.empty(); }
    long xmin() const { return comp_.empty() ? 0 : comp_.begin()->first; }
    long xmax() const { return comp_.empty() ? 0 : comp_.rbegin()->first; }
    const std::map<long, QSeries>& components() const { return comp_; }

    void add_term(long xnum, long qnum, const Cyclo& v);
    void add_component(long xnum, const QSeries& s);

    // coefficient of x^{j/xden}; absent powers are exact zeros, an empty
    // series throws OutOfRange
    QSeries extract(long xnum) const;

    TwoVarSeries operator+(const TwoVarSeries& o) const;
    TwoVarSeries operator-() const;
    TwoVarSeries operator*(const TwoVarSeries& o) const;
    TwoVarSeries scaled(const Cyclo& s) const;
    // multiply by scalar * x^{xnum/xden} q^{qnum/qden}
    TwoVarSeries mono_mul(const Cyclo& s, long xnum, long qnum) const;

    // substitute z -> z + lambda*tau + mu (x = e^{2 pi i z}): the x^{k/xden}
    // component picks up q^{lambda k / xden} and the root of unity
    // e^{2 pi i mu k / xden}
    TwoVarSeries z_shift(long lambda, long mu) const;
    // x -> x^{-1}
    TwoVarSeries x_inverted() const;

    TwoVarSeries truncated(long qprec) const;

    static bool equal_to_shared_prec(const TwoVarSeries& a, const TwoVarSeries& b);

private:
    long xden_;
    long qden_;
    long qprec_;
    std::map<long, QSeries> comp_;

    void prune();
};

inline QSeries laurent_extract(const TwoVarSeries& f, long xnum) { return f.extract(xnum); }

} // namespace qmock

#endif
