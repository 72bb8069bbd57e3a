#include "qmock/arith.hpp"
#include "qmock/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <sstream>

namespace qmock {

SmallDivisorSet small_divisor_set(long long n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    SmallDivisorSet s;
    s.n = n;
    for (long long d = 1; d * d <= n; ++d)
        if (n % d == 0 && (d - n / d) % 2 == 0)
            s.divisors.push_back(d);
    return s;
}

CongruentSmallDivisorSet congruent_small_divisor_set(long long r, long p, int a) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be an odd prime");
    if (a < 1) throw std::invalid_argument("a must be >= 1");
    CongruentSmallDivisorSet s;
    s.r = r;
    s.p = p;
    s.a = a;
    long long mod = 2;
    for (int i = 0; i < a; ++i) mod *= p;
    for (long long d = 1; d * d <= r; ++d)
        if (r % d == 0 && (d - r / d) % 2 == 0 && (d + r / d) % mod == 0)
            s.divisors.push_back(d);
    return s;
}

Cyclo sigma_small_1(const DirichletChar& psi, long long n) {
    if (psi.is_trivial() && psi.modulus() == 1)
        throw std::invalid_argument("sigma_small_1 requires non-trivial psi");
    if (psi.is_rational_valued()) {
        Rational acc(0);
        for (long long d : small_divisor_set(n).divisors) {
            long long j = n / d;
            int v = psi.sign_at((j * j - d * d) / 4);
            if (v) acc += Rational((long)v) * Rational((long)d);
        }
        return Cyclo(acc);
    }
    Cyclo acc;
    for (long long d : small_divisor_set(n).divisors) {
        long long j = n / d;
        acc += psi((j * j - d * d) / 4) * Cyclo(Rational((long)d));
    }
    return acc;
}

Cyclo sigma_small_2(const DirichletChar& chi, const DirichletChar& psi, long long n) {
    if (!psi.is_odd()) throw OddnessViolation("psi must be odd in sigma_small_2");
    if (chi.is_rational_valued() && psi.is_rational_valued()) {
        long long acc = 0;
        for (long long d : small_divisor_set(n).divisors) {
            long long j = n / d;
            int cv = chi.sign_at((j - d) / 2);
            if (!cv) continue;
            int pv = psi.sign_at((j + d) / 2);
            if (!pv) continue;
            acc += (long long)cv * pv * d * d;
        }
        return Cyclo(Rational((long)acc));
    }
    Cyclo acc;
    for (long long d : small_divisor_set(n).divisors) {
        long long j = n / d;
        Cyclo cv = chi((j - d) / 2);
        if (cv.is_zero()) continue;
        Cyclo pv = psi((j + d) / 2);
        if (pv.is_zero()) continue;
        acc += cv * pv * Cyclo(Rational((long)(d * d)));
    }
    return acc;
}

Rational hurwitz_class_number(long long n) {
    if (n < 0) throw std::invalid_argument("H(n) needs n >= 0");
    if (n == 0) return Rational(-1, 12);
    if (n % 4 == 1 || n % 4 == 2) return Rational(0);
    // reduced forms (a,b,c), b^2 - 4ac = -n, -a < b <= a <= c, b >= 0 if a = c
    Rational h(0);
    for (long long a = 1; 3 * a * a <= n; ++a) {
        for (long long b = -a + 1; b <= a; ++b) {
            long long t = b * b + n;
            if (t % (4 * a)) continue;
            long long c = t / (4 * a);
            if (c < a) continue;
            if (a == c && b < 0) continue;
            if (a == b && b == c)
                h += Rational(1, 3);
            else if (b == 0 && a == c)
                h += Rational(1, 2);
            else
                h += 1;
        }
    }
    return h;
}

std::vector<Rational> hurwitz_table(long long upto) {
    std::vector<Rational> t(upto + 1, Rational(0));
    t[0] = Rational(-1, 12);
    for (long long n = 3; n <= upto; ++n)
        if (n % 4 == 0 || n % 4 == 3) t[n] = hurwitz_class_number(n);
    return t;
}

QSeries theta_series(const DirichletChar& psi, long prec) {
    QSeriesBuilder b(1, prec);
    if (psi.parity() == 0 && psi.is_trivial() && psi.modulus() == 1)
        b.add(0, Cyclo(Rational(1, 2))); // theta_1 keeps its n = 0 term
    for (long long n = 1; n * n < prec; ++n) {
        Cyclo v = psi(n);
        if (v.is_zero()) continue;
        if (psi.parity() == 1) v *= Cyclo(Rational((long)n));
        b.add(n * n, v);
    }
    return b.build();
}

QSeries sigma2_series(const DirichletChar& chi, const DirichletChar& psi, long prec) {
    QSeriesBuilder b(1, prec);
    for (long n = 1; n < prec; ++n)
        b.add(n, sigma_small_2(chi, psi, n));
    return b.build();
}

QSeries mock_numerator(const DirichletChar& chi, const DirichletChar& psi, long prec) {
    QSeries s = sigma2_series(chi, psi, prec);
    if (chi.is_trivial() && chi.modulus() == 1) {
        QSeriesBuilder extra(1, prec);
        for (long long n = 1; n * n < prec; ++n) {
            Cyclo v = psi(n);
            if (v.is_zero()) continue;
            extra.add(n * n, v * Cyclo(rat((long)(n * n), 2)));
        }
        s += extra.build();
    }
    return s;
}

QSeries mock_plus_part(const DirichletChar& chi, const DirichletChar& psi, long prec) {
    return qs_div(mock_numerator(chi, psi, prec), theta_series(psi, prec));
}

Cyclo congruent_sigma_divisor(const DirichletChar& chi, const DirichletChar& psi,
                              long long r, long p, int a) {
    long long pa = 1;
    for (int i = 0; i < a; ++i) pa *= p;
    Cyclo acc;
    for (long long d : congruent_small_divisor_set(r, p, a).divisors) {
        long long j = r / d;
        Cyclo cv = chi((j - d) / 2);
        if (cv.is_zero()) continue;
        Cyclo pv = psi((j + d) / (2 * pa));
        if (pv.is_zero()) continue;
        acc += cv * pv * Cyclo(Rational((long)(d * d)));
    }
    return acc;
}

Cyclo congruent_sigma_lattice(const DirichletChar& chi, const DirichletChar& psi,
                              long long r, long p, int a) {
    long long pa = 1;
    for (int i = 0; i < a; ++i) pa *= p;
    Cyclo acc;
    // (p^a n)^2 - m^2 = r with m >= 1 forces p^a n = (d + r/d)/2 <= (r+1)/2
    for (long long n = 1; 2 * pa * n <= r + 1; ++n) {
        long long mm = (pa * n) * (pa * n) - r;
        if (mm < 1) continue;
        long long m = (long long)std::llround(std::sqrt((double)mm));
        while (m * m < mm) ++m;
        while (m > 0 && m * m > mm) --m;
        if (m * m != mm || m < 1) continue;
        Cyclo cv = chi(m);
        if (cv.is_zero()) continue;
        Cyclo pv = psi(n);
        if (pv.is_zero()) continue;
        long long w = pa * n - m;
        acc += cv * pv * Cyclo(Rational((long)(w * w)));
    }
    return acc;
}

VerificationReport verify_hurwitz_identity(long prec, int threads) {
    DirichletChar psi = DirichletChar::from_kronecker(-4);
    DirichletChar chi = DirichletChar::trivial(1);
    long nmax = prec / 8;
    auto H = hurwitz_table(prec);

    std::vector<std::string> bad(nmax + 1);
    parallel_for(1, nmax + 1, threads, [&](long n) {
        Cyclo lhs = sigma_small_2(chi, psi, 8 * n);
        Rational rhs(0);
        for (long j = 1; (2 * j - 1) * (2 * j - 1) < 8 * n; ++j) {
            Rational term = Rational(2 * j - 1) * H[8 * n - (2 * j - 1) * (2 * j - 1)];
            rhs += (j % 2 == 1) ? term : -term;
        }
        rhs *= -4;
        if (!(lhs.is_rational() && lhs.rational_value() == rhs)) {
            std::ostringstream os;
            os << "n=" << n << " sigma=" << lhs.str() << " hurwitz-side=" << rat_str(rhs);
            bad[n] = os.str();
        }
    });
    for (long n = 1; n <= nmax; ++n)
        if (!bad[n].empty())
            return VerificationReport::fail("hurwitz-identity", "8n<=" + std::to_string(prec), bad[n]);

    // q-series form: sum sigma(8n) q^{8n} = -4 theta_psi * sum H(8n-1) q^{8n-1}
    QSeries lhs_q = sigma2_series(chi, psi, prec).restricted_mod(8, 0);
    QSeriesBuilder hb(1, prec);
    for (long e = 7; e < prec; e += 8)
        hb.add(e, Cyclo(H[e]));
    QSeries rhs_q = (theta_series(psi, prec) * hb.build()).scaled(Cyclo(Rational(-4)));
    for (long e = rhs_q.offset(); e < rhs_q.prec(); ++e)
        if (!rhs_q.coeff_num(e).is_zero() && e % 8 != 0)
            return VerificationReport::fail("hurwitz-identity", "q-series",
                                            "rhs exponent " + std::to_string(e) + " not 0 mod 8");
    if (auto m = QSeries::first_mismatch(lhs_q, rhs_q)) {
        std::ostringstream os;
        os << "q-series mismatch at exponent " << rat_str(*m);
        return VerificationReport::fail("hurwitz-identity", "q-series", os.str());
    }
    auto rep = VerificationReport::pass("hurwitz-identity",
                                        "scalar n<=" + std::to_string(nmax) +
                                            ", q-series to q^" + std::to_string(prec));
    rep.params["psi"] = psi.spec_string();
    return rep;
}

VerificationReport padic_congruence_check(const DirichletChar& psi, const DirichletChar& chi,
                                          long p, int a, int b, long prec) {
    return padic_congruence_check_with(mock_plus_part(chi, psi, prec), psi, chi, p, a, b, prec);
}

VerificationReport padic_congruence_check_with(const QSeries& plus, const DirichletChar& psi,
                                               const DirichletChar& chi, long p, int a, int b,
                                               long prec) {
    if (p < 3 || p % 2 == 0) throw std::invalid_argument("p must be an odd prime");
    for (long q = 3; q * q <= p; q += 2)
        if (p % q == 0) throw std::invalid_argument("p must be prime");
    if (a < 1 || b < 1) throw std::invalid_argument("a, b must be >= 1");
    if (!psi.is_rational_valued() || !chi.is_rational_valued())
        throw NonRationalCharacter("divisibility needs rational character values");

    long p2a = 1;
    for (int i = 0; i < 2 * a; ++i) p2a *= p;
    long pb = 1;
    for (int i = 0; i < b; ++i) pb *= p;
    int need = std::min(a, b);

    QSeries th_scaled = theta_series(psi, prec).v_operator(p2a);
    QSeries u = (th_scaled * plus).u_operator(pb);

    VerificationReport rep;
    rep.name = "padic-congruence";
    rep.params["p"] = std::to_string(p);
    rep.params["a"] = std::to_string(a);
    rep.params["b"] = std::to_string(b);
    rep.params["chi"] = chi.spec_string();
    rep.params["psi"] = psi.spec_string();
    rep.range = "exponents < " + std::to_string(u.prec());

    for (long e = u.offset(); e < u.prec(); ++e) {
        Cyclo cv = u.coeff_num(e);
        if (cv.is_zero()) continue;
        const Rational& r = cv.rational_value();
        // denominator must be a p-unit before clearing it
        if (mpz_divisible_ui_p(r.get_den().get_mpz_t(), p))
            throw NonRationalCharacter("coefficient denominator divisible by p");
        if (padic_valuation(r, p) < need) {
            std::ostringstream os;
            os << "coefficient of q^" << e << " is " << rat_str(r) << ", v_" << p << " < " << need;
            rep.status = VerificationReport::Status::Fail;
            rep.witness = os.str();
            return rep;
        }
    }
    rep.status = VerificationReport::Status::Pass;
    return rep;
}

std::vector<HurwitzAnalogueCandidate>
search_hurwitz_analogue(const DirichletChar& psi, const Rational& c_lo, const Rational& c_hi,
                        long t_lo, long t_hi, long prec) {
    std::vector<HurwitzAnalogueCandidate> out;
    DirichletChar chi = DirichletChar::trivial(1);
    QSeries num = mock_numerator(chi, psi, prec);
    QSeries th = theta_series(psi, prec);
    auto H = hurwitz_table(prec);
    for (long t = std::max<long>(2, t_lo); t <= t_hi; ++t) {
        QSeries lhs = num.restricted_mod(t, 0);
        for (long r = 0; r < t; ++r) {
            QSeriesBuilder hb(1, prec);
            for (long e = 1; e < prec; ++e)
                if (e % t == (long)r && H[e] != 0) hb.add(e, Cyclo(H[e]));
            QSeries hs = hb.build();
            if (hs.known_zero()) continue;
            QSeries rhs = th * hs;
            // solve C from the first nonzero coefficient of either side
            auto le = lhs.leading_exponent_num();
            auto re = rhs.leading_exponent_num();
            if (!le || !re || *le != *re) continue;
            Rational C = lhs.coeff_num(*le).rational_value() / rhs.coeff_num(*re).rational_value();
            if (C == 0 || C < c_lo || C > c_hi) continue;
            if (QSeries::equal_to_shared_prec(lhs, rhs.scaled(Cyclo(C)))) {
                HurwitzAnalogueCandidate cand;
                cand.t = t;
                cand.residue = r;
                cand.C = C;
                cand.verified_upto = std::min(lhs.prec(), rhs.prec());
                out.push_back(cand);
            }
        }
    }
    return out;
}

} // namespace qmock
