#include "qmock/qseries.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace qmock {

QSeries QSeries::zero(long prec, long den) {
    QSeries s;
    s.den_ = den;
    s.offset_ = prec;
    s.prec_ = prec;
    return s;
}

QSeries QSeries::one(long prec) {
    return monomial(Cyclo(Rational(1)), 0, 1, prec);
}

QSeries QSeries::monomial(const Cyclo& a, long expo, long den, long prec) {
    QSeries s;
    s.den_ = den;
    if (expo >= prec) {
        s.offset_ = s.prec_ = prec;
        return s;
    }
    s.offset_ = expo;
    s.prec_ = prec;
    s.c_.assign(prec - expo, Cyclo());
    s.c_[0] = a;
    return s;
}

bool QSeries::known_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

std::optional<long> QSeries::leading_exponent_num() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero()) return offset_ + (long)i;
    return std::nullopt;
}

std::optional<Rational> QSeries::leading_exponent() const {
    auto e = leading_exponent_num();
    if (!e) return std::nullopt;
    return rat(*e, den_);
}

Cyclo QSeries::coeff_num(long e) const {
    if (e >= prec_) throw std::out_of_range("coefficient beyond guaranteed precision");
    if (e < offset_) return Cyclo();
    return c_[e - offset_];
}

Cyclo QSeries::coeff(const Rational& e) const {
    Rational scaled = e * den_;
    if (!is_integral(scaled)) {
        if (rat(prec_, den_) <= e)
            throw std::out_of_range("coefficient beyond guaranteed precision");
        return Cyclo(); // exponent not on the lattice
    }
    if (!scaled.get_num().fits_slong_p()) throw std::overflow_error("exponent overflow");
    return coeff_num(scaled.get_num().get_si());
}

void QSeries::trim_leading_zeros() {
    size_t k = 0;
    while (k < c_.size() && c_[k].is_zero()) ++k;
    if (k) {
        c_.erase(c_.begin(), c_.begin() + k);
        offset_ += (long)k;
    }
}

QSeries QSeries::with_den(long d) const {
    if (d == den_) return *this;
    if (d % den_ != 0) throw std::invalid_argument("with_den target not a multiple");
    long s = d / den_;
    QSeries r;
    r.den_ = d;
    r.offset_ = offset_ * s;
    r.prec_ = prec_ * s;
    r.c_.assign(r.prec_ - r.offset_, Cyclo());
    for (size_t i = 0; i < c_.size(); ++i)
        r.c_[i * s] = c_[i];
    return r;
}

QSeries QSeries::canonicalized() const {
    QSeries t = *this;
    t.trim_leading_zeros();
    long g = den_;
    for (size_t i = 0; i < t.c_.size(); ++i)
        if (!t.c_[i].is_zero()) g = gcd_long(g, t.offset_ + (long)i);
    if (g == 1) return t;
    auto cdiv = [](long a, long g2) { return a >= 0 ? (a + g2 - 1) / g2 : -((-a) / g2); };
    QSeries r;
    r.den_ = den_ / g;
    // ceil is exact here: no exponent of the coarser lattice lies in
    // [prec/den, ceil(prec/g)/new_den)
    r.prec_ = cdiv(prec_, g);
    long new_off = cdiv(t.offset_, g);
    if (new_off > r.prec_) new_off = r.prec_;
    r.offset_ = new_off;
    r.c_.assign(r.prec_ - r.offset_, Cyclo());
    for (size_t i = 0; i < t.c_.size(); ++i) {
        long e = t.offset_ + (long)i;
        if (!t.c_[i].is_zero())
            r.c_[e / g - r.offset_] = t.c_[i];
    }
    return r;
}

QSeries QSeries::truncated(long prec_num) const {
    if (prec_num >= prec_) return *this;
    QSeries r = *this;
    r.prec_ = prec_num;
    if (r.offset_ > r.prec_) r.offset_ = r.prec_;
    r.c_.resize(std::max<long>(r.prec_ - r.offset_, 0));
    return r;
}

void QSeries::unify(QSeries& a, QSeries& b) {
    if (a.den_ == b.den_) return;
    long d = lcm_long(a.den_, b.den_);
    a = a.with_den(d);
    b = b.with_den(d);
}

QSeries& QSeries::operator+=(const QSeries& o) {
    QSeries a = *this, b = o;
    unify(a, b);
    QSeries r;
    r.den_ = a.den_;
    r.prec_ = std::min(a.prec_, b.prec_);
    r.offset_ = std::min({a.offset_, b.offset_, r.prec_});
    r.c_.assign(r.prec_ - r.offset_, Cyclo());
    for (long e = a.offset_; e < std::min(a.prec_, r.prec_); ++e)
        r.c_[e - r.offset_] += a.c_[e - a.offset_];
    for (long e = b.offset_; e < std::min(b.prec_, r.prec_); ++e)
        r.c_[e - r.offset_] += b.c_[e - b.offset_];
    return *this = r;
}

QSeries QSeries::operator-() const {
    QSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

QSeries& QSeries::operator-=(const QSeries& o) { return *this += -o; }

QSeries QSeries::scaled(const Cyclo& s) const {
    QSeries r = *this;
    for (auto& x : r.c_)
        if (!x.is_zero()) x *= s;
    return r;
}

QSeries QSeries::shifted(long e_num) const {
    QSeries r = *this;
    r.offset_ += e_num;
    r.prec_ += e_num;
    return r;
}

namespace {

bool all_rational(const QSeries& f) {
    for (const auto& x : f.coeffs())
        if (!x.is_rational()) return false;
    return true;
}

} // namespace

QSeries operator*(const QSeries& a0, const QSeries& b0) {
    QSeries a = a0, b = b0;
    QSeries::unify(a, b);
    // effective offsets: exponents strictly below are exact zeros
    long oa = a.leading_exponent_num().value_or(a.prec());
    long ob = b.leading_exponent_num().value_or(b.prec());
    long prec = std::min(a.prec() + ob, b.prec() + oa);
    QSeries r = QSeries::zero(prec, a.den());
    if (a.known_zero() || b.known_zero()) return r;
    long off = oa + ob;
    if (off >= prec) return r;
    // iterate the sparser operand on the outside
    const QSeries* s1 = &a;
    const QSeries* s2 = &b;
    auto count_nonzero = [](const QSeries& f) {
        size_t n = 0;
        for (const auto& x : f.coeffs())
            if (!x.is_zero()) ++n;
        return n;
    };
    if (count_nonzero(b) < count_nonzero(a)) std::swap(s1, s2);

    std::vector<Cyclo> out(prec - off, Cyclo());
    if (all_rational(a) && all_rational(b)) {
        // fast path: plain rational convolution
        std::vector<Rational> acc(prec - off, Rational(0));
        for (long i = 0; i < (long)s1->coeffs().size(); ++i) {
            const Cyclo& x = s1->coeffs()[i];
            if (x.is_zero()) continue;
            const Rational& xr = x.rational_value();
            long e1 = s1->offset() + i;
            long jmax = std::min<long>((long)s2->coeffs().size(), prec - e1 - s2->offset());
            for (long j = 0; j < jmax; ++j) {
                const Cyclo& y = s2->coeffs()[j];
                if (y.is_zero()) continue;
                acc[e1 + s2->offset() + j - off] += xr * y.rational_value();
            }
        }
        for (size_t i = 0; i < acc.size(); ++i)
            if (acc[i] != 0) out[i] = Cyclo(acc[i]);
    } else {
        for (long i = 0; i < (long)s1->coeffs().size(); ++i) {
            const Cyclo& x = s1->coeffs()[i];
            if (x.is_zero()) continue;
            long e1 = s1->offset() + i;
            long jmax = std::min<long>((long)s2->coeffs().size(), prec - e1 - s2->offset());
            for (long j = 0; j < jmax; ++j) {
                const Cyclo& y = s2->coeffs()[j];
                if (y.is_zero()) continue;
                out[e1 + s2->offset() + j - off] += x * y;
            }
        }
    }
    r.offset_ = off;
    r.c_ = std::move(out);
    return r;
}

QSeries qs_div(const QSeries& a0, const QSeries& b0) {
    QSeries a = a0, b = b0;
    QSeries::unify(a, b);
    auto lead = b.leading_exponent_num();
    if (!lead) throw ZeroDivisor("divisor is zero to its precision");
    long ob = *lead;
    Cyclo lead_coeff = b.coeff_num(ob);
    Cyclo lead_inv;
    try {
        lead_inv = lead_coeff.inverse();
    } catch (const std::domain_error&) {
        throw NonUnitLeading("leading coefficient of divisor is not invertible");
    }
    long oa = a.offset();
    long oq = oa - ob;
    long prec = std::min(a.prec() - ob, b.prec() + oa - 2 * ob);
    QSeries q = QSeries::zero(prec, a.den());
    if (oq >= prec) return q;
    q.offset_ = oq;
    q.c_.assign(prec - oq, Cyclo());

    bool rational = all_rational(a) && all_rational(b) && lead_coeff.is_rational();
    if (rational) {
        Rational inv = lead_inv.rational_value();
        std::vector<Rational> qq(prec - oq, Rational(0));
        for (long e = oq; e < prec; ++e) {
            Rational acc = 0;
            {
                Cyclo av = a.coeff_num(e + ob);
                if (!av.is_zero()) acc = av.rational_value();
            }
            long lo = std::max(oq, e + ob - (b.prec() - 1));
            for (long e2 = lo; e2 < e; ++e2) {
                if (qq[e2 - oq] == 0) continue;
                Cyclo bv = b.coeff_num(e + ob - e2);
                if (bv.is_zero()) continue;
                acc -= qq[e2 - oq] * bv.rational_value();
            }
            qq[e - oq] = acc * inv;
        }
        for (size_t i = 0; i < qq.size(); ++i)
            if (qq[i] != 0) q.c_[i] = Cyclo(qq[i]);
    } else {
        for (long e = oq; e < prec; ++e) {
            Cyclo acc = a.coeff_num(e + ob);
            long lo = std::max(oq, e + ob - (b.prec() - 1));
            for (long e2 = lo; e2 < e; ++e2) {
                const Cyclo& qv = q.c_[e2 - oq];
                if (qv.is_zero()) continue;
                Cyclo bv = b.coeff_num(e + ob - e2);
                if (bv.is_zero()) continue;
                acc -= qv * bv;
            }
            q.c_[e - oq] = acc * lead_inv;
        }
    }
    return q;
}

QSeries QSeries::u_operator(long p) const {
    if (p < 1) throw std::invalid_argument("U(p) needs p >= 1");
    QSeries f = canonicalized();
    if (f.den_ != 1) throw FractionalExponents("U operator needs integer exponents");
    QSeries r;
    r.den_ = 1;
    // exponents e with p*e < prec are known
    auto fdiv = [](long x, long y) { return x >= 0 ? x / y : -((-x + y - 1) / y); };
    r.prec_ = fdiv(f.prec_ - 1, p) + 1;
    r.offset_ = -fdiv(-f.offset_, p); // ceil(offset/p)
    if (r.offset_ > r.prec_) r.offset_ = r.prec_;
    r.c_.assign(r.prec_ - r.offset_, Cyclo());
    for (long e = r.offset_; e < r.prec_; ++e) {
        long src = p * e;
        if (src >= f.offset_ && src < f.prec_)
            r.c_[e - r.offset_] = f.c_[src - f.offset_];
    }
    return r;
}

QSeries QSeries::v_operator(long m) const {
    if (m < 1) throw std::invalid_argument("V(m) needs m >= 1");
    return rescale_exponents(Rational(m));
}

QSeries QSeries::rescale_exponents(const Rational& s) const {
    if (s <= 0) throw std::invalid_argument("exponent scale must be positive");
    // exponent e/den -> s*e/den; new den = den * den(s) / gcd adjustments
    long sn = s.get_num().get_si();
    long sd = s.get_den().get_si();
    QSeries r;
    r.den_ = den_ * sd;
    r.offset_ = offset_ * sn;
    r.prec_ = prec_ * sn;
    r.c_.assign(r.prec_ - r.offset_, Cyclo());
    for (size_t i = 0; i < c_.size(); ++i)
        if (!c_[i].is_zero())
            r.c_[(offset_ + (long)i) * sn - r.offset_] = c_[i];
    return r.canonicalized();
}

QSeries QSeries::restricted_mod(long m, long rres) const {
    QSeries f = canonicalized();
    if (f.den_ != 1) throw FractionalExponents("restriction needs integer exponents");
    QSeries r = f;
    for (size_t i = 0; i < r.c_.size(); ++i) {
        long e = r.offset_ + (long)i;
        if (((e % m) + m) % m != rres) r.c_[i] = Cyclo();
    }
    return r;
}

Rational QSeries::shared_prec(const QSeries& a, const QSeries& b) {
    return std::min(rat(a.prec_, a.den_), rat(b.prec_, b.den_));
}

std::optional<Rational> QSeries::first_mismatch(const QSeries& a0, const QSeries& b0) {
    QSeries a = a0, b = b0;
    unify(a, b);
    long prec = std::min(a.prec_, b.prec_);
    long lo = std::min(a.offset_, b.offset_);
    for (long e = lo; e < prec; ++e) {
        Cyclo av = e >= a.offset_ ? a.coeff_num(e) : Cyclo();
        Cyclo bv = e >= b.offset_ ? b.coeff_num(e) : Cyclo();
        if (av != bv) return rat(e, a.den_);
    }
    return std::nullopt;
}

bool QSeries::equal_to_shared_prec(const QSeries& a, const QSeries& b) {
    return !first_mismatch(a, b).has_value();
}

std::complex<double> QSeries::eval(const std::complex<double>& tau) const {
    const double two_pi = 6.283185307179586476925286766559;
    std::complex<double> acc(0.0, 0.0);
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        double e = (double)(offset_ + (long)i) / (double)den_;
        std::complex<double> w = std::exp(std::complex<double>(0, two_pi) * tau * e);
        acc += c_[i].embed() * w;
    }
    return acc;
}

std::string QSeries::str(long max_terms) const {
    std::ostringstream os;
    long shown = 0;
    bool first = true;
    for (size_t i = 0; i < c_.size() && shown < max_terms; ++i) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        ++shown;
        long e = offset_ + (long)i;
        os << "(" << c_[i].str() << ")";
        if (e != 0) {
            os << "*q^";
            if (den_ == 1)
                os << e;
            else
                os << "(" << e << "/" << den_ << ")";
        }
    }
    if (first) os << "0";
    os << " + O(q^(" << prec_ << "/" << den_ << "))";
    return os.str();
}

void QSeriesBuilder::add(long e_num, const Cyclo& v) {
    if (e_num >= prec_ || v.is_zero()) return;
    auto it = m_.find(e_num);
    if (it == m_.end())
        m_.emplace(e_num, v);
    else {
        it->second += v;
        if (it->second.is_zero()) m_.erase(it);
    }
}

QSeries QSeriesBuilder::build() const {
    QSeries r = QSeries::zero(prec_, den_);
    if (m_.empty()) return r;
    long off = m_.begin()->first;
    r.offset_ = off;
    r.c_.assign(prec_ - off, Cyclo());
    for (const auto& [e, v] : m_)
        r.c_[e - off] = v;
    return r;
}

long sturm_bound(const Rational& weight, long level) {
    if (weight <= 1) throw std::invalid_argument("Sturm bound needs weight > 1");
    if (level < 1) throw std::invalid_argument("level must be >= 1");
    // index m = N prod_{p | N} (1 + 1/p)
    Rational m(level);
    long n = level;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            m *= Rational(p + 1, p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) m *= Rational(n + 1, n);
    Rational b = weight * m / 12;
    return rat_floor(b).get_si();
}

} // namespace qmock
