#include "qmock/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>

namespace qmock {

long euler_phi(long n) {
    long result = n;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// exact division, divisor monic-ish (leading coefficient divides exactly)
std::vector<Integer> poly_divexact_z(std::vector<Integer> a, const std::vector<Integer>& b) {
    std::vector<Integer> q(a.size() - b.size() + 1, Integer(0));
    for (long i = (long)q.size() - 1; i >= 0; --i) {
        Integer coef = a[i + b.size() - 1] / b.back();
        q[i] = coef;
        if (coef != 0)
            for (size_t j = 0; j < b.size(); ++j)
                a[i + j] -= coef * b[j];
    }
    return q;
}

std::map<long, std::vector<Integer>> phi_cache;
std::mutex phi_mutex;

std::vector<Integer> compute_cyclotomic(long n) {
    // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d
    std::vector<Integer> f(n + 1, Integer(0));
    f[0] = -1;
    f[n] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d == 0)
            f = poly_divexact_z(f, cyclotomic_polynomial(d));
    }
    return f;
}

} // namespace

const std::vector<Integer>& cyclotomic_polynomial(long n) {
    {
        std::lock_guard<std::mutex> lk(phi_mutex);
        auto it = phi_cache.find(n);
        if (it != phi_cache.end()) return it->second;
    }
    std::vector<Integer> p = n == 1 ? std::vector<Integer>{Integer(-1), Integer(1)}
                                    : compute_cyclotomic(n);
    std::lock_guard<std::mutex> lk(phi_mutex);
    return phi_cache.emplace(n, std::move(p)).first->second;
}

void Cyclo::collapse_if_rational() {
    if (cond_ == 1) return;
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return;
    Rational v = c_[0];
    cond_ = 1;
    c_.assign(1, v);
}

Cyclo Cyclo::reduce_poly(long conductor, std::vector<Rational> poly, bool collapse) {
    const auto& phi = cyclotomic_polynomial(conductor);
    long deg = (long)phi.size() - 1; // = euler_phi(conductor)
    for (long i = (long)poly.size() - 1; i >= deg; --i) {
        if (poly[i] == 0) continue;
        Rational coef = poly[i]; // phi monic
        poly[i] = 0;
        for (long j = 0; j < deg; ++j)
            poly[i - deg + j] -= coef * Rational(phi[j]);
    }
    poly.resize(deg, Rational(0));
    Cyclo r;
    r.cond_ = conductor;
    r.c_ = std::move(poly);
    if (collapse) r.collapse_if_rational();
    return r;
}

Cyclo Cyclo::root(long conductor, long power) {
    if (conductor < 1) throw std::invalid_argument("conductor must be >= 1");
    long k = ((power % conductor) + conductor) % conductor;
    std::vector<Rational> poly(k + 1, Rational(0));
    poly[k] = 1;
    return reduce_poly(conductor, std::move(poly));
}

Cyclo Cyclo::from_coeffs(long conductor, std::vector<Rational> coeffs) {
    if ((long)coeffs.size() != euler_phi(conductor))
        throw std::invalid_argument("coefficient count != phi(conductor)");
    return reduce_poly(conductor, std::move(coeffs));
}

bool Cyclo::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Cyclo::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

const Rational& Cyclo::rational_value() const {
    if (!is_rational()) throw std::domain_error("not a rational value");
    return c_[0];
}

Cyclo Cyclo::lifted(long m) const {
    if (m == cond_) return *this;
    if (m % cond_ != 0) throw std::invalid_argument("lift target not a multiple of conductor");
    long step = m / cond_;
    std::vector<Rational> poly(((c_.size() - 1) * step) + 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) poly[i * step] = c_[i];
    // keep conductor-m coordinates: callers rely on matching lengths
    return reduce_poly(m, std::move(poly), false);
}

Cyclo Cyclo::conj() const {
    if (cond_ == 1) return *this;
    std::vector<Rational> poly(cond_, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) poly[(cond_ - (long)i) % cond_] += c_[i];
    return reduce_poly(cond_, std::move(poly));
}

Cyclo Cyclo::operator-() const {
    Cyclo r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
    if (cond_ == o.cond_) {
        for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        collapse_if_rational();
        return *this;
    }
    long m = lcm_long(cond_, o.cond_);
    Cyclo a = lifted(m), b = o.lifted(m);
    for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    a.collapse_if_rational();
    return *this = a;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
    return *this += -o;
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
    if (cond_ == 1 && o.cond_ == 1) {
        c_[0] *= o.c_[0];
        return *this;
    }
    if (cond_ == 1) { // rational scalar times cyclotomic
        Rational s = c_[0];
        Cyclo r = o;
        for (auto& x : r.c_) x *= s;
        r.collapse_if_rational();
        return *this = r;
    }
    if (o.cond_ == 1) {
        Rational s = o.c_[0];
        for (auto& x : c_) x *= s;
        collapse_if_rational();
        return *this;
    }
    long m = lcm_long(cond_, o.cond_);
    Cyclo a = lifted(m), b = o.lifted(m);
    std::vector<Rational> poly(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0) poly[i + j] += a.c_[i] * b.c_[j];
    }
    return *this = reduce_poly(m, std::move(poly));
}

bool operator==(const Cyclo& a, const Cyclo& b) {
    if (a.cond_ == b.cond_) return a.c_ == b.c_;
    long m = lcm_long(a.cond_, b.cond_);
    return a.lifted(m).c_ == b.lifted(m).c_;
}

namespace {

// extended gcd in Q[x]: returns u with u*a == gcd (mod m), gcd constant
std::vector<Rational> poly_mod_inverse(std::vector<Rational> a, std::vector<Rational> m) {
    auto deg = [](const std::vector<Rational>& p) -> long {
        for (long i = (long)p.size() - 1; i >= 0; --i)
            if (p[i] != 0) return i;
        return -1;
    };
    std::vector<Rational> r0 = std::move(m), r1 = std::move(a);
    std::vector<Rational> t0{Rational(0)}, t1{Rational(1)};
    while (deg(r1) >= 0) {
        // divide r0 by r1
        std::vector<Rational> q(std::max<long>(deg(r0) - deg(r1) + 1, 1), Rational(0));
        std::vector<Rational> rem = r0;
        long d1 = deg(r1);
        for (long i = deg(rem); i >= d1; --i) {
            if (rem[i] == 0) continue;
            Rational c = rem[i] / r1[d1];
            q[i - d1] = c;
            for (long j = 0; j <= d1; ++j)
                rem[i - d1 + j] -= c * r1[j];
        }
        // (r0, r1) = (r1, rem); (t0, t1) = (t1, t0 - q*t1)
        std::vector<Rational> t2(std::max(t0.size(), q.size() + t1.size()), Rational(0));
        for (size_t i = 0; i < t0.size(); ++i) t2[i] = t0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < t1.size(); ++j)
                t2[i + j] -= q[i] * t1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
        while (!r1.empty() && r1.back() == 0) r1.pop_back();
    }
    long d0 = deg(r0);
    if (d0 != 0) throw std::domain_error("element not invertible");
    Rational g = r0[0];
    for (auto& x : t0) x /= g;
    return t0;
}

} // namespace

Cyclo Cyclo::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in cyclotomic field");
    if (cond_ == 1) return Cyclo(Rational(1) / c_[0]);
    const auto& phiz = cyclotomic_polynomial(cond_);
    std::vector<Rational> m(phiz.size());
    for (size_t i = 0; i < phiz.size(); ++i) m[i] = Rational(phiz[i]);
    std::vector<Rational> u = poly_mod_inverse(c_, m);
    u.resize(phiz.size() - 1, Rational(0));
    Cyclo r;
    r.cond_ = cond_;
    r.c_ = std::move(u);
    r.collapse_if_rational();
    return r;
}

std::complex<double> Cyclo::embed(int precision_bits) const {
    if (precision_bits < 53)
        throw std::invalid_argument("embedding precision must be >= 53 bits");
    if (precision_bits > 64)
        throw std::invalid_argument("embedding supports at most 64 bits");
    const long double two_pi = 6.283185307179586476925286766559L;
    long double ang = two_pi / (long double)cond_;
    std::complex<long double> z(std::cos(ang), std::sin(ang));
    std::complex<long double> acc(0.0L, 0.0L);
    for (long i = (long)c_.size() - 1; i >= 0; --i) {
        acc *= z;
        acc += (long double)c_[i].get_d();
    }
    return {(double)acc.real(), (double)acc.imag()};
}

std::string Cyclo::str() const {
    if (is_rational()) return rat_str(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << rat_str(c_[i]);
        if (i >= 1) os << "*zeta(" << cond_ << ")" << (i > 1 ? "^" + std::to_string(i) : "");
    }
    if (first) os << "0";
    return os.str();
}

} // namespace qmock
