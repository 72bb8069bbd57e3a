#ifndef QMOCK_ARITH_HPP
#define QMOCK_ARITH_HPP

#include "qmock/character.hpp"
#include "qmock/qseries.hpp"
#include "qmock/report.hpp"

namespace qmock {

struct OddnessViolation : std::runtime_error {
    explicit OddnessViolation(const std::string& m) : std::runtime_error(m) {}
};

// divisors d | n with d <= n/d and d == n/d (mod 2), ascending
struct SmallDivisorSet {
    long long n = 0;
    std::vector<long long> divisors;
};
SmallDivisorSet small_divisor_set(long long n);

// additionally d + r/d == 0 (mod 2 p^a)
struct CongruentSmallDivisorSet {
    long long r = 0;
    long p = 0;
    int a = 0;
    std::vector<long long> divisors;
};
CongruentSmallDivisorSet congruent_small_divisor_set(long long r, long p, int a);

// sum_{d in D_n} psi(((n/d)^2 - d^2)/4) d
Cyclo sigma_small_1(const DirichletChar& psi, long long n);
// sum_{d in D_n} chi((n/d - d)/2) psi((n/d + d)/2) d^2; requires psi odd
Cyclo sigma_small_2(const DirichletChar& chi, const DirichletChar& psi, long long n);

// Hurwitz class number by reduced-form enumeration; H(0) = -1/12,
// H(n) = 0 for n = 1, 2 (mod 4), weights 1/3 for (a,a,a) and 1/2 for (a,0,a)
Rational hurwitz_class_number(long long n);
std::vector<Rational> hurwitz_table(long long upto); // H(0..upto)

// Shimura theta: (1/2) sum_{n in Z} psi(n) n^{lambda} q^{n^2}; the n = 0 term
// survives only for the modulus-1 character (constant 1/2)
QSeries theta_series(const DirichletChar& psi, long prec);

QSeries sigma2_series(const DirichletChar& chi, const DirichletChar& psi, long prec);
// sigma2 series, plus (1/2) sum psi(n) n^2 q^{n^2} when chi is the modulus-1
// character
QSeries mock_numerator(const DirichletChar& chi, const DirichletChar& psi, long prec);
// mock_numerator / theta_psi
QSeries mock_plus_part(const DirichletChar& chi, const DirichletChar& psi, long prec);

// the two q-exponent-indexed routes for the congruent divisor sum:
// sum over D_r(p) of chi((r/d - d)/2) psi((r/d + d)/(2 p^a)) d^2, and the
// lattice sum over (p^a n)^2 - m^2 = r of chi(m) psi(n) (p^a n - m)^2
Cyclo congruent_sigma_divisor(const DirichletChar& chi, const DirichletChar& psi,
                              long long r, long p, int a);
Cyclo congruent_sigma_lattice(const DirichletChar& chi, const DirichletChar& psi,
                              long long r, long p, int a);

// sigma^sm_{2,1}(8n) = -4 sum_j (-1)^{j-1} (2j-1) H(8n - (2j-1)^2), for all
// 8n <= prec, plus the q-series form against -4 theta_psi * sum H(8n-1) q^{8n-1}
VerificationReport verify_hurwitz_identity(long prec, int threads = 1);

// divisibility of (theta_psi(p^{2a} tau) * mock_plus_part) | U(p^b) by
// p^{min(a,b)}, checked by p-adic valuation after clearing each coefficient's
// denominator (which is coprime to p for rational-valued characters)
VerificationReport padic_congruence_check(const DirichletChar& psi, const DirichletChar& chi,
                                          long p, int a, int b, long prec);
// same check against a precomputed plus part (one division shared by a sweep)
VerificationReport padic_congruence_check_with(const QSeries& plus, const DirichletChar& psi,
                                               const DirichletChar& chi, long p, int a, int b,
                                               long prec);

// the candidate search for the paper's open question: restrictions of the
// mock numerator to exponent progressions t Z compared against
// C * theta_psi * (H-series restricted to a residue class mod t)
struct HurwitzAnalogueCandidate {
    long t = 0;
    long residue = 0;
    Rational C;
    long verified_upto = 0;
};
std::vector<HurwitzAnalogueCandidate>
search_hurwitz_analogue(const DirichletChar& psi, const Rational& c_lo, const Rational& c_hi,
                        long t_lo, long t_hi, long prec);

} // namespace qmock

#endif
