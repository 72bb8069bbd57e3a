#include "qmock/twovar.hpp"

namespace qmock {

void TwoVarSeries::add_term(long xnum, long qnum, const Cyclo& v) {
    if (v.is_zero() || qnum >= qprec_) return;
    auto it = comp_.find(xnum);
    if (it == comp_.end()) {
        comp_.emplace(xnum, QSeries::monomial(v, qnum, qden_, qprec_));
    } else {
        it->second += QSeries::monomial(v, qnum, qden_, qprec_);
    }
}

void TwoVarSeries::add_component(long xnum, const QSeries& s) {
    QSeries t = s.with_den(qden_ % s.den() == 0 ? qden_ : s.den()).truncated(qprec_);
    if (t.den() != qden_) throw std::invalid_argument("component den mismatch");
    auto it = comp_.find(xnum);
    if (it == comp_.end())
        comp_.emplace(xnum, t);
    else
        it->second += t;
}

QSeries TwoVarSeries::extract(long xnum) const {
    // absent x-powers are exact zeros (builders store every nonzero
    // contribution below qprec); only an empty series has no answer at all
    if (comp_.empty())
        throw OutOfRange("empty series has no x-power " + std::to_string(xnum));
    auto it = comp_.find(xnum);
    if (it == comp_.end()) return QSeries::zero(qprec_, qden_);
    return it->second;
}

void TwoVarSeries::prune() {
    for (auto it = comp_.begin(); it != comp_.end();) {
        if (it->second.known_zero())
            it = comp_.erase(it);
        else
            ++it;
    }
}

TwoVarSeries TwoVarSeries::operator+(const TwoVarSeries& o) const {
    if (xden_ != o.xden_ || qden_ != o.qden_)
        throw std::invalid_argument("TwoVarSeries layout mismatch");
    TwoVarSeries r(xden_, qden_, std::min(qprec_, o.qprec_));
    r.comp_ = comp_;
    for (auto& [k, s] : r.comp_) s = s.truncated(r.qprec_);
    for (const auto& [k, s] : o.comp_) {
        auto it = r.comp_.find(k);
        if (it == r.comp_.end())
            r.comp_.emplace(k, s.truncated(r.qprec_));
        else
            it->second += s.truncated(r.qprec_);
    }
    r.prune();
    return r;
}

TwoVarSeries TwoVarSeries::operator-() const {
    TwoVarSeries r = *this;
    for (auto& [k, s] : r.comp_) s = -s;
    return r;
}

TwoVarSeries TwoVarSeries::operator*(const TwoVarSeries& o) const {
    if (xden_ != o.xden_ || qden_ != o.qden_)
        throw std::invalid_argument("TwoVarSeries layout mismatch");
    TwoVarSeries r(xden_, qden_, std::min(qprec_, o.qprec_));
    for (const auto& [ka, sa] : comp_) {
        for (const auto& [kb, sb] : o.comp_) {
            QSeries prod = (sa * sb).truncated(r.qprec_);
            // product precision can shrink below target only through offsets;
            // keep the weakest guarantee
            if (prod.prec() < r.qprec_) r.qprec_ = std::max(prod.prec(), 0L);
            auto it = r.comp_.find(ka + kb);
            if (it == r.comp_.end())
                r.comp_.emplace(ka + kb, prod);
            else
                it->second += prod;
        }
    }
    for (auto& [k, s] : r.comp_) s = s.truncated(r.qprec_);
    r.prune();
    return r;
}

TwoVarSeries TwoVarSeries::scaled(const Cyclo& s) const {
    TwoVarSeries r = *this;
    for (auto& [k, f] : r.comp_) f = f.scaled(s);
    r.prune();
    return r;
}

TwoVarSeries TwoVarSeries::mono_mul(const Cyclo& s, long xnum, long qnum) const {
    TwoVarSeries r(xden_, qden_, qprec_ + qnum);
    for (const auto& [k, f] : comp_)
        r.comp_.emplace(k + xnum, f.scaled(s).shifted(qnum));
    r.prune();
    return r;
}

TwoVarSeries TwoVarSeries::z_shift(long lambda, long mu) const {
    TwoVarSeries r(xden_, qden_, qprec_);
    for (const auto& [k, f] : comp_) {
        // q-shift lambda*k/xden must land on the q-lattice
        long num = lambda * k * qden_;
        if (num % xden_ != 0) throw std::invalid_argument("z_shift off the q-lattice");
        long qshift = num / xden_;
        // e^{2 pi i mu k / xden}
        Cyclo ph = Cyclo::root(xden_, mu * k);
        QSeries g = f.scaled(ph).shifted(qshift);
        // shifting changes the guaranteed precision; intersect
        g = g.truncated(qprec_);
        if (g.prec() < r.qprec_) r.qprec_ = g.prec();
        auto it = r.comp_.find(k);
        if (it == r.comp_.end())
            r.comp_.emplace(k, g);
        else
            it->second += g;
    }
    for (auto& [k, s] : r.comp_) s = s.truncated(r.qprec_);
    r.prune();
    return r;
}

TwoVarSeries TwoVarSeries::x_inverted() const {
    TwoVarSeries r(xden_, qden_, qprec_);
    for (const auto& [k, f] : comp_)
        r.comp_.emplace(-k, f);
    return r;
}

TwoVarSeries TwoVarSeries::truncated(long qprec) const {
    TwoVarSeries r(xden_, qden_, std::min(qprec, qprec_));
    for (const auto& [k, f] : comp_)
        r.comp_.emplace(k, f.truncated(r.qprec()));
    r.prune();
    return r;
}

bool TwoVarSeries::equal_to_shared_prec(const TwoVarSeries& a, const TwoVarSeries& b) {
    if (a.xden_ != b.xden_) return false;
    std::map<long, bool> keys;
    for (const auto& [k, f] : a.comp_) keys[k] = true;
    for (const auto& [k, f] : b.comp_) keys[k] = true;
    for (const auto& [k, dummy] : keys) {
        (void)dummy;
        QSeries fa = a.comp_.count(k) ? a.comp_.at(k) : QSeries::zero(a.qprec_, a.qden_);
        QSeries fb = b.comp_.count(k) ? b.comp_.at(k) : QSeries::zero(b.qprec_, b.qden_);
        if (!QSeries::equal_to_shared_prec(fa, fb)) return false;
    }
    return true;
}

} // namespace qmock
