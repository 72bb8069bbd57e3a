#include "qmock/cyclotomic.hpp"

#include <doctest.h>

#include <random>

using namespace qmock;

namespace {

// independent embedding oracle: evaluate the power basis directly with
// cos/sin, no Horner sharing with the implementation
std::complex<double> embed_oracle(const Cyclo& c) {
    const double two_pi = 6.283185307179586476925286766559;
    std::complex<double> acc(0, 0);
    for (size_t k = 0; k < c.coeffs().size(); ++k) {
        double ang = two_pi * (double)k / (double)c.conductor();
        acc += c.coeffs()[k].get_d() * std::complex<double>(std::cos(ang), std::sin(ang));
    }
    return acc;
}

Cyclo random_cyclo(std::mt19937_64& rng, long conductor) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    std::vector<Rational> c(euler_phi(conductor));
    for (auto& x : c) x = rat(num(rng), den(rng));
    return Cyclo::from_coeffs(conductor, std::move(c));
}

} // namespace

TEST_CASE("cyclotomic roots and products") {
    CHECK(Cyclo::root(4, 2) == Cyclo(Rational(-1)));
    CHECK(Cyclo::root(3, 1) + Cyclo::root(3, 2) == Cyclo(Rational(-1)));
    CHECK(Cyclo::root(4, 1) * Cyclo::root(4, 1) == Cyclo(Rational(-1)));
    CHECK(Cyclo::root(3, 1) * Cyclo::root(3, 2) == Cyclo(Rational(1)));
    CHECK(Cyclo::root(5, 0) == Cyclo(Rational(1)));

    auto z8 = Cyclo::root(8, 1).embed();
    CHECK(std::abs(z8 - std::complex<double>(std::sqrt(0.5), std::sqrt(0.5))) < 1e-12);
    CHECK(std::abs(Cyclo(Rational(1)).embed() - std::complex<double>(1, 0)) < 1e-15);
    CHECK(std::abs(Cyclo::root(4, 1).embed() - std::complex<double>(0, 1)) < 1e-14);
    CHECK(std::abs(Cyclo::root(3, 1).embed() -
                   std::complex<double>(-0.5, 0.86602540378443864676)) < 1e-12);

    // (1 + z5)(1 + z5^4) matches the embedding oracle
    Cyclo a = Cyclo(Rational(1)) + Cyclo::root(5, 1);
    Cyclo b = Cyclo(Rational(1)) + Cyclo::root(5, 4);
    Cyclo p = a * b;
    CHECK(std::abs(p.embed() - embed_oracle(a) * embed_oracle(b)) < 1e-12);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937_64 rng(12345);
    for (long cond : {3L, 4L, 5L, 8L, 12L, 24L}) {
        for (int t = 0; t < 12; ++t) {
            Cyclo a = random_cyclo(rng, cond);
            Cyclo b = random_cyclo(rng, cond == 3 ? 4 : cond); // exercise mixed conductors too
            Cyclo c = random_cyclo(rng, cond);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
        }
    }
}

TEST_CASE("embedding is a ring homomorphism up to floating error") {
    std::mt19937_64 rng(777);
    for (long cond : {5L, 8L, 12L, 24L}) {
        for (int t = 0; t < 8; ++t) {
            Cyclo a = random_cyclo(rng, cond);
            Cyclo b = random_cyclo(rng, cond);
            CHECK(std::abs((a * b).embed() - a.embed() * b.embed()) < 1e-10);
            CHECK(std::abs((a + b).embed() - (a.embed() + b.embed())) < 1e-10);
        }
    }
}

TEST_CASE("conjugation is an involution and inverts roots") {
    std::mt19937_64 rng(99);
    for (long cond : {3L, 4L, 5L, 7L, 8L, 12L, 24L}) {
        for (int t = 0; t < 6; ++t) {
            Cyclo a = random_cyclo(rng, cond);
            CHECK(a.conj().conj() == a);
        }
        Cyclo z = Cyclo::root(cond, 1);
        CHECK(z.conj() == Cyclo::root(cond, cond - 1));
        CHECK(z * z.conj() == Cyclo(Rational(1)));
    }
}

TEST_CASE("field inverse") {
    std::mt19937_64 rng(4242);
    for (long cond : {4L, 5L, 8L, 12L}) {
        for (int t = 0; t < 8; ++t) {
            Cyclo a = random_cyclo(rng, cond);
            if (a.is_zero()) continue;
            CHECK(a * a.inverse() == Cyclo(Rational(1)));
        }
    }
    CHECK_THROWS_AS(Cyclo().inverse(), std::domain_error);
}

TEST_CASE("rational collapse keeps equality exact across conductors") {
    Cyclo z = Cyclo::root(4, 2); // -1 reduced
    CHECK(z.conductor() == 1);
    CHECK(z.is_rational());
    CHECK(Cyclo::root(12, 6) == Cyclo(Rational(-1)));
    CHECK(Cyclo::root(6, 1) == Cyclo::root(12, 2));
}
