#include "qmock/appell.hpp"
#include "qmock/parallel.hpp"

#include <cmath>
#include <sstream>

namespace qmock {

namespace {

constexpr double PI = 3.14159265358979323846264338327950288;

// e^{2 pi i f} as an exact root of unity
Cyclo root_of_unity(const Rational& f) {
    Rational g = f - rat_floor(f);
    g.canonicalize();
    long den = g.get_den().get_si();
    long num = g.get_num().get_si();
    return Cyclo::root(den, num);
}

} // namespace

QSeries appell_lerch_specialized(int ell, int j, const TorsionPoint& w, const TorsionPoint& z,
                                 const Rational& prec) {
    if (ell < 1) throw std::invalid_argument("level must be >= 1");
    if (j < 0 || j > 2) throw std::invalid_argument("derivative order must be 0, 1, or 2");

    long dw = (long)w.mu.get_den().get_si();
    long dz = (long)z.mu.get_den().get_si();
    long D = lcm_long(2 * dw, dz);

    // exponent bookkeeping over 1/D: E0(n) = ell mu_w / 2 + ell n(n+1)/2 + n mu_z
    auto to_num = [&](const Rational& r) -> long {
        Rational s = r * D;
        if (!is_integral(s)) throw std::logic_error("exponent off the 1/D lattice");
        return s.get_num().get_si();
    };
    long base = to_num(w.mu * ell / 2);
    long step_z = to_num(z.mu);
    long half_ell = -1; // ell n(n+1)/2 is integral, scaled by D below
    (void)half_ell;
    long en_shift = to_num(w.mu); // e(n) = n + mu_w, scaled: n*D + en_shift
    long precn = (long)rat_ceil(prec * D).get_si();

    auto E0 = [&](long n) -> long {
        return base + D * ell * n * (n + 1) / 2 + n * step_z;
    };
    auto Emin = [&](long n) -> long {
        long en = n * D + en_shift;
        return E0(n) + std::max(0L, -en);
    };

    // quadratic lower bound E_min(n) >= ell n^2 D/2 - |n| B - C gives the scan range
    double Bq = (double)D * ell / 2.0 + std::fabs((double)step_z);
    double Cq = std::fabs((double)base) + (double)std::max(precn, 0L);
    double disc = Bq * Bq + 2.0 * (double)D * ell * Cq;
    long N = (long)((Bq + std::sqrt(disc)) / ((double)D * ell)) + (long)std::fabs(w.mu.get_d()) + 8;
    if (Emin(N + 1) < precn || Emin(-N - 1) < precn)
        throw TruncationBoundExceeded("n-range bound failed its safety check");

    Cyclo phase_w = root_of_unity(w.nu * ell / 2); // e^{pi i ell nu_w}
    Cyclo rho = root_of_unity(w.nu);               // e^{2 pi i nu_w}
    Cyclo rho_inv = rho.conj();                    // |rho| = 1
    bool rho_is_one = rho.is_one();

    QSeriesBuilder out(D, precn);
    for (long n = -N; n <= N; ++n) {
        if (Emin(n) >= precn) continue;
        Cyclo scal = phase_w * root_of_unity(z.nu * n);
        if ((ell * n) % 2 != 0) scal = -scal;
        if (j > 0) {
            if (n == 0) continue; // n^j kills the term
            scal *= Cyclo(rat_pow(Rational(n), j));
        }
        long e0 = E0(n);
        long en = n * D + en_shift;
        if (en > 0) {
            Cyclo cur = scal;
            for (long e = e0; e < precn; e += en) {
                out.add(e, cur);
                cur *= rho;
            }
        } else if (en < 0) {
            // 1/(1 - rho q^e) = -sum_{k>=1} rho^{-k} q^{-ek}
            Cyclo cur = -(scal * rho_inv);
            for (long e = e0 - en; e < precn; e -= en) {
                out.add(e, cur);
                cur *= rho_inv;
            }
        } else {
            if (rho_is_one)
                throw PoleAtSpecialization("denominator vanishes at n = " + std::to_string(n));
            out.add(e0, scal * (Cyclo(Rational(1)) - rho).inverse());
        }
    }
    return out.build().canonicalized();
}

std::complex<double> appell_lerch_numeric(int ell, int j, std::complex<double> w,
                                          std::complex<double> z, std::complex<double> tau,
                                          int nmax) {
    using C = std::complex<double>;
    C acc(0, 0);
    for (int n = -nmax; n <= nmax; ++n) {
        // single-exp formulation; separate powers overflow for large |n|
        C num_arg = C(0, 2 * PI) * ((double)ell * n * (n + 1) / 2.0 * tau + (double)n * z);
        if (num_arg.real() < -700) continue; // underflows to zero anyway
        C numer = std::exp(num_arg);
        if ((ell * n) % 2 != 0) numer = -numer;
        if (j > 0) numer *= std::pow((double)n, (double)j);
        C den_arg = C(0, 2 * PI) * (w + (double)n * tau);
        if (den_arg.real() > 60) {
            // 1/(1 - E) ~ -1/E for huge |E|
            acc += -numer * std::exp(-den_arg);
            continue;
        }
        C den = 1.0 - std::exp(den_arg);
        if (std::abs(den) < 1e-12)
            throw PoleAtSpecialization("numeric denominator vanished");
        acc += numer / den;
    }
    return std::exp(C(0, PI) * (double)ell * w) * acc;
}

VerificationReport verify_alprop(const DirichletChar& chi, const DirichletChar& psi, long prec,
                                 int threads) {
    VerificationReport rep;
    rep.name = "appell-lerch-rewriting";
    rep.params["chi"] = chi.spec_string();
    rep.params["psi"] = psi.spec_string();
    rep.range = "to q^" + std::to_string(prec);
    if (chi.is_trivial() || chi.parity() != 0) {
        rep.status = VerificationReport::Status::Skipped;
        rep.witness = "chi must be even and non-trivial";
        return rep;
    }
    if (!psi.is_odd()) {
        rep.status = VerificationReport::Status::Skipped;
        rep.witness = "psi must be odd";
        return rep;
    }
    long M = chi.modulus();
    if (M % psi.modulus() != 0) {
        rep.status = VerificationReport::Status::Skipped;
        rep.witness = "M_psi must divide M_chi";
        return rep;
    }

    QSeries lhs = sigma2_series(chi, psi, prec);

    // RHS = (1/2) sum_{b=1}^{M-1} chi(b) sum_{c=0}^{M-1} psi(b+c)
    //       q^{c(c+2b-M)} (M D_z + c)^2 A_1(2Mc tau, z, 2M^2 tau)
    //       at z = (2(b+c)-M) M tau + 1/2, i.e. in the A-sum's own variable
    //       tau' = 2M^2 tau: w = (c/M) tau', z = ((2(b+c)-M)/(2M)) tau' + 1/2.
    std::vector<std::pair<long, long>> pairs;
    for (long b = 1; b < M; ++b)
        for (long c = 0; c < M; ++c)
            pairs.emplace_back(b, c);
    std::vector<QSeries> parts(pairs.size(), QSeries::zero(prec, 1));
    std::vector<std::string> errors(pairs.size());

    parallel_for(0, (long)pairs.size(), threads, [&](long idx) {
        auto [b, c] = pairs[idx];
        try {
            Cyclo cb = chi(b);
            if (cb.is_zero()) return;
            Cyclo pv = psi(b + c);
            if (pv.is_zero()) return;
            long pref = c * (c + 2 * b - M);
            TorsionPoint wpt{rat(c, M), Rational(0)};
            TorsionPoint zpt{rat(2 * (b + c) - M, 2 * M), Rational(1, 2)};
            Rational prec_a = rat(prec - pref, 2 * M * M);
            // (M D_z + c)^2 = M^2 D_z^2 + 2cM D_z + c^2
            QSeries acc = QSeries::zero(prec, 1);
            const long coefs[3] = {c * c, 2 * c * M, M * M};
            for (int jj = 0; jj <= 2; ++jj) {
                if (coefs[jj] == 0) continue;
                QSeries a = appell_lerch_specialized(1, jj, wpt, zpt, prec_a);
                a = a.rescale_exponents(Rational(2 * M * M)); // back to base-q exponents
                if (a.den() != 1) {
                    QSeries az = a.canonicalized();
                    if (az.den() != 1) throw std::logic_error("specialization off the q-lattice");
                    a = az;
                }
                acc += a.shifted(pref).scaled(Cyclo(Rational(coefs[jj])));
            }
            parts[idx] = acc.scaled(cb * pv * Cyclo(Rational(1, 2))).truncated(prec);
        } catch (const std::exception& e) {
            errors[idx] = e.what();
        }
    });
    for (size_t i = 0; i < errors.size(); ++i)
        if (!errors[i].empty()) {
            rep.status = VerificationReport::Status::Fail;
            rep.witness = "b,c = " + std::to_string(pairs[i].first) + "," +
                          std::to_string(pairs[i].second) + ": " + errors[i];
            return rep;
        }

    QSeries rhs = QSeries::zero(prec, 1);
    for (const auto& p : parts) rhs += p;

    if (auto m = QSeries::first_mismatch(lhs, rhs)) {
        std::ostringstream os;
        os << "exponent " << rat_str(*m) << ": sigma side " << lhs.coeff(*m).str()
           << " vs Appell-Lerch side " << rhs.coeff(*m).str();
        rep.status = VerificationReport::Status::Fail;
        rep.witness = os.str();
        return rep;
    }
    if (QSeries::shared_prec(lhs, rhs) < prec) {
        rep.status = VerificationReport::Status::Fail;
        rep.witness = "assembled precision below target";
        return rep;
    }
    rep.status = VerificationReport::Status::Pass;
    return rep;
}

TwoVarSeries appell_a2_kernel(long qprec2, A2Branch branch) {
    TwoVarSeries out(1, 2, qprec2);
    bool want_pos = branch == A2Branch::All || branch == A2Branch::Positive;
    bool want_zero = branch == A2Branch::All || branch == A2Branch::Zero;
    bool want_neg = branch == A2Branch::All || branch == A2Branch::Negative;

    // A_2(t - tau/2, 0; tau) = x q^{-1/2} sum_n q^{n(n+1)} / (1 - x q^{n-1/2}),
    // x = e^{2 pi i t}; exponents tracked in halves
    if (want_pos) {
        for (long n = 1; 2 * n * (n + 1) - 1 < qprec2; ++n)
            for (long k = 0; 2 * n * (n + 1) - 1 + (2 * n - 1) * k < qprec2; ++k)
                out.add_term(1 + k, 2 * n * (n + 1) - 1 + (2 * n - 1) * k, Cyclo(Rational(1)));
    }
    if (want_zero) {
        // 1/(1 - x q^{-1/2}) = -sum_{k>=1} x^{-k} q^{k/2}
        for (long k = 1; -1 + k < qprec2; ++k)
            out.add_term(1 - k, -1 + k, Cyclo(Rational(-1)));
    }
    if (want_neg) {
        for (long n = -1; 2 * n * n >= 0 && 2 * n * n < qprec2; --n)
            for (long k = 1; 2 * n * (n + 1) - 1 + (1 - 2 * n) * k < qprec2; ++k)
                out.add_term(1 - k, 2 * n * (n + 1) - 1 + (1 - 2 * n) * k, Cyclo(Rational(-1)));
    }
    return out;
}

QSeries partial_theta_extraction(long prec) {
    TwoVarSeries kernel = appell_a2_kernel(2 * prec);
    return kernel.extract(-2).canonicalized();
}

VerificationReport verify_partial_theta(long prec) {
    VerificationReport rep;
    rep.name = "partial-theta-extraction";
    rep.range = "to q^" + std::to_string(prec);

    QSeries j = partial_theta_extraction(prec);
    QSeriesBuilder expect(1, prec);
    for (long n = 1; n * n < prec; ++n)
        expect.add(n * n, Cyclo(Rational(-1)));
    if (auto m = QSeries::first_mismatch(j, expect.build())) {
        rep.status = VerificationReport::Status::Fail;
        rep.witness = "J differs from -sum q^{n^2} at exponent " + rat_str(*m);
        return rep;
    }
    // the n >= 1 branch stores only positive x-powers, so x^{-2} is an exact 0
    if (!appell_a2_kernel(2 * prec, A2Branch::Positive).extract(-2).known_zero()) {
        rep.status = VerificationReport::Status::Fail;
        rep.witness = "n>=1 branch contributes to x^{-2}";
        return rep;
    }
    QSeries zero = appell_a2_kernel(2 * prec, A2Branch::Zero).extract(-2);
    if (!QSeries::equal_to_shared_prec(zero, QSeries::monomial(Cyclo(Rational(-1)), 1, 1, prec).with_den(2).truncated(2 * prec))) {
        rep.status = VerificationReport::Status::Fail;
        rep.witness = "n=0 branch is not -q";
        return rep;
    }
    rep.status = VerificationReport::Status::Pass;
    return rep;
}

} // namespace qmock
