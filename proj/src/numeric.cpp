#include "qmock/numeric.hpp"

#include <cmath>
#include <sstream>

namespace qmock {

namespace {

constexpr double PI = 3.14159265358979323846264338327950288;
constexpr double EULER_GAMMA = 0.57721566490153286060651209008240243;

// continued fraction for Gamma(s,x), Lentz; good for x >= ~1
double upper_gamma_cf(double s, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - s;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 1000; ++i) {
        double an = -1.0 * i * (i - s);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-17) break;
    }
    return std::exp(-x + s * std::log(x)) * h;
}

// lower-gamma alternating series: gamma(s,x) = x^s sum_k (-x)^k / (k! (s+k)),
// s not a nonpositive integer; accurate for small x
double lower_gamma_series(double s, double x) {
    double term = 1.0;
    double sum = 1.0 / s;
    for (int k = 1; k <= 400; ++k) {
        term *= -x / k;
        double add = term / (s + k);
        sum += add;
        if (std::fabs(add) < 1e-18 * std::fabs(sum)) break;
    }
    return std::pow(x, s) * sum;
}

// exponential integral E1(x) = Gamma(0,x), small-x series
double e1_series(double x) {
    double sum = -EULER_GAMMA - std::log(x);
    double term = 1.0;
    for (int k = 1; k <= 400; ++k) {
        term *= -x / k;
        double add = -term / k;
        sum += add;
        if (std::fabs(add) < 1e-18 * std::fabs(sum)) break;
    }
    return sum;
}

double complete_gamma(double s) {
    // exact-ish for half-integers via recurrence from Gamma(1/2)
    double twice = 2.0 * s;
    if (std::fabs(twice - std::llround(twice)) < 1e-12) {
        long t = (long)std::llround(twice);
        if (t % 2 == 0) {
            long n = t / 2;
            if (n >= 1) {
                double g = 1.0;
                for (long i = 2; i < n; ++i) g *= i;
                return g;
            }
        } else {
            // Gamma(n + 1/2) or negative half-integers by downward recurrence
            double g = std::sqrt(PI); // Gamma(1/2)
            double a = 0.5;
            if (s >= 0.5) {
                while (a + 1.0 <= s + 1e-9) {
                    g *= a;
                    a += 1.0;
                }
                return g;
            }
            while (a - 1.0 >= s - 1e-9) {
                a -= 1.0;
                g /= a;
            }
            return g;
        }
    }
    return std::tgamma(s);
}

} // namespace

double incomplete_gamma(double s, double x) {
    if (!(x > 0)) throw NonPositiveX("incomplete_gamma needs x > 0");
    if (x >= std::max(1.0, s + 2.0)) return upper_gamma_cf(s, x);
    // small x
    bool s_nonpos_int = s <= 0.5 && std::fabs(s - std::llround(s)) < 1e-12;
    if (!s_nonpos_int)
        return complete_gamma(s) - lower_gamma_series(s, x);
    long si = (long)std::llround(s);
    double g = e1_series(x); // Gamma(0,x)
    double cur_s = 0.0;
    double xp = 1.0 / x;     // x^{s-1} running power for s = 0 downwards
    double ex = std::exp(-x);
    while (cur_s > si) {
        // Gamma(s-1,x) = (Gamma(s,x) - x^{s-1} e^{-x}) / (s-1)
        g = (g - xp * ex) / (cur_s - 1.0);
        cur_s -= 1.0;
        xp /= x;
    }
    return g;
}

double gamma_recurrence_residual(double s, double x) {
    double lhs = incomplete_gamma(s + 1.0, x);
    double rhs = s * incomplete_gamma(s, x) + std::pow(x, s) * std::exp(-x);
    return std::fabs(lhs - rhs);
}

LipschitzResult lipschitz_check(std::complex<double> w, int r, long terms) {
    if (r < 2) throw std::invalid_argument("Lipschitz check needs r >= 2");
    using C = std::complex<double>;
    long J = terms;
    C lhs(0, 0);
    for (long j = -J; j <= J; ++j)
        lhs += std::pow(w + (double)j, -(double)r);
    // Euler-Maclaurin tails: sum_{j>J} f(j) ~ int_{J+1/2} f + f'(J+1/2)/24
    auto tail = [&](C edge, double sgn) {
        // edge = w + sgn*(J+1/2); f(x) = (w + sgn x)^{-r}
        C intpart = sgn * std::pow(edge, 1.0 - r) / ((double)r - 1.0);
        C fp = -(double)r * std::pow(edge, -(double)r - 1.0) * sgn;
        return intpart + fp / 24.0;
    };
    lhs += tail(w + (double)J + 0.5, +1.0);
    lhs += tail(w - (double)J - 0.5, -1.0);

    C rhs(0, 0);
    C iw = C(0, 2 * PI) * w;
    double fact = 1.0;
    for (int i = 2; i < r; ++i) fact *= i;
    C pref = std::pow(C(0, -2 * PI), (double)r) / fact;
    for (long j = 1; j <= 4 * J + 64; ++j) {
        C term = std::pow((double)j, r - 1.0) * std::exp(iw * (double)j);
        rhs += term;
        if (std::abs(term) < 1e-20 && j > 8) break;
    }
    rhs *= pref;

    LipschitzResult res;
    res.residual = std::abs(lhs - rhs);
    // third-derivative scale of the dropped Euler-Maclaurin term
    res.tail_bound = 2.0 * r * (r + 1) * (r + 2) / 5760.0 *
                     std::pow(std::abs(w) + (double)J + 0.5, -(double)r - 3.0) * (J + 1.0);
    return res;
}

namespace {

std::complex<double> simpson(double a, double b, std::complex<double> fa,
                             std::complex<double> fm, std::complex<double> fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

std::complex<double> adaptive_step(const std::function<std::complex<double>(double)>& f, double a,
                                   double b, std::complex<double> fa, std::complex<double> fm,
                                   std::complex<double> fb, std::complex<double> whole, double tol,
                                   int depth, int max_depth) {
    if (depth > max_depth) throw QuadratureFailure("adaptive quadrature did not converge");
    double m = 0.5 * (a + b);
    std::complex<double> flm = f(0.5 * (a + m));
    std::complex<double> frm = f(0.5 * (m + b));
    std::complex<double> left = simpson(a, m, fa, flm, fm);
    std::complex<double> right = simpson(m, b, fm, frm, fb);
    std::complex<double> delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adaptive_step(f, a, m, fa, flm, fm, left, tol / 2.0, depth + 1, max_depth) +
           adaptive_step(f, m, b, fm, frm, fb, right, tol / 2.0, depth + 1, max_depth);
}

} // namespace

std::complex<double> integrate_adaptive(const std::function<std::complex<double>(double)>& f,
                                        double a, double b, double tol, int max_depth) {
    std::complex<double> fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    std::complex<double> whole = simpson(a, b, fa, fm, fb);
    return adaptive_step(f, a, b, fa, fm, fb, whole, tol, 0, max_depth);
}

double eichler_integral_check(const DirichletChar& chi, std::complex<double> tau, int trunc_m,
                              double quad_tol) {
    using C = std::complex<double>;
    if (!(tau.imag() > 0)) throw std::invalid_argument("tau must be in the upper half plane");
    if (!chi.is_rational_valued())
        throw NonRationalCharacter("numeric Eichler check needs rational character values");
    if (chi.parity() != 0) throw std::invalid_argument("theta_chi here needs even chi");
    double v = tau.imag();
    bool has_const = chi.is_trivial() && chi.modulus() == 1;

    // series side: (2/Gamma(-1/2)) sum chi(m) m Gamma(-1/2, 4 pi m^2 v) q^{-m^2}
    C series(0, 0);
    const double two_over_gamma = -1.0 / std::sqrt(PI); // 2/Gamma(-1/2)
    for (int m = 1; m <= trunc_m; ++m) {
        // |Gamma(-1/2,4 pi m^2 v) q^{-m^2}| <= e^{-2 pi m^2 v}; stop once that
        // is far below the tolerance (the factors overflow separately)
        if (2.0 * PI * m * m * v > 45.0) break;
        int cv = chi.sign_at(m);
        if (!cv) continue;
        double g = incomplete_gamma(-0.5, 4.0 * PI * m * m * v);
        C qpow = std::exp(C(0, -2.0 * PI) * tau * (double)(m * m));
        series += (double)cv * (double)m * g * qpow;
    }
    series *= two_over_gamma;
    if (has_const) series += -1.0 / (2.0 * PI * std::sqrt(v));

    // integral side along w = -conj(tau) + i s:  -i(w+tau) = 2v + s
    double smax = 1.0;
    while (std::exp(-2.0 * PI * (v + smax)) / std::pow(2.0 * v + smax, 1.5) > 1e-16 && smax < 200)
        smax *= 1.5;
    auto integrand = [&](double s) -> C {
        C w = -std::conj(tau) + C(0, s);
        C th(0, 0);
        if (has_const) th += 0.5;
        for (int n = 1; n * n <= 4000; ++n) {
            int cv = chi.sign_at(n);
            if (!cv) continue;
            C e = std::exp(C(0, 2.0 * PI) * ((double)(n * n)) * w);
            th += (double)cv * e;
            if (std::exp(-2.0 * PI * n * n * (v + s)) < 1e-18) break;
        }
        return th * std::pow(2.0 * v + s, -1.5);
    };
    // w-integral has dw = i ds and prefactor i/(pi sqrt 2): total -1/(pi sqrt 2)
    C integral = integrate_adaptive(integrand, 0.0, smax, quad_tol);
    // tail of the constant part, integrated exactly
    if (has_const) integral += 0.5 * 2.0 / std::sqrt(2.0 * v + smax);
    integral *= -1.0 / (PI * std::sqrt(2.0));

    return std::abs(series - integral);
}

VerificationReport verify_lipschitz(double tol) {
    VerificationReport rep;
    rep.name = "lipschitz-summation";
    rep.range = "r in {2,3,4}, w in {i, 0.3+0.7i, -0.4+1.2i}";
    double worst = 0;
    for (int r : {2, 3, 4}) {
        for (std::complex<double> w :
             {std::complex<double>(0, 1), std::complex<double>(0.3, 0.7),
              std::complex<double>(-0.4, 1.2)}) {
            auto res = lipschitz_check(w, r, 10000);
            worst = std::max(worst, res.residual);
        }
    }
    rep.residual = worst;
    rep.status = worst < tol ? VerificationReport::Status::Pass : VerificationReport::Status::Fail;
    if (!rep.passed()) rep.witness = "max residual " + std::to_string(worst);
    return rep;
}

VerificationReport verify_gamma_recurrence(double tol) {
    VerificationReport rep;
    rep.name = "incomplete-gamma-recurrence";
    rep.range = "s in [-2,2] step 1/4, x in [0.1,20] step 0.35";
    double worst = 0;
    for (double s = -2.0; s <= 2.0 + 1e-9; s += 0.25)
        for (double x = 0.1; x <= 20.0 + 1e-9; x += 0.35)
            worst = std::max(worst, gamma_recurrence_residual(s, x));
    rep.residual = worst;
    rep.status = worst < tol ? VerificationReport::Status::Pass : VerificationReport::Status::Fail;
    if (!rep.passed()) rep.witness = "max residual " + std::to_string(worst);
    return rep;
}

VerificationReport verify_eichler(double tol) {
    VerificationReport rep;
    rep.name = "eichler-integral-rewriting";
    rep.range = "chi in {trivial:1, kronecker:12}, tau in {i, 2i}";
    double worst = 0;
    for (const char* spec : {"trivial:1", "kronecker:12"}) {
        DirichletChar chi = DirichletChar::parse(spec);
        for (std::complex<double> tau : {std::complex<double>(0, 1), std::complex<double>(0, 2)}) {
            double r = eichler_integral_check(chi, tau, 20, 1e-10);
            worst = std::max(worst, r);
        }
    }
    rep.residual = worst;
    rep.status = worst < tol ? VerificationReport::Status::Pass : VerificationReport::Status::Fail;
    if (!rep.passed()) rep.witness = "max residual " + std::to_string(worst);
    return rep;
}

} // namespace qmock
