#ifndef QMOCK_CHARACTER_HPP
#define QMOCK_CHARACTER_HPP

#include "qmock/cyclotomic.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace qmock {

struct NonMultiplicative : std::runtime_error {
    explicit NonMultiplicative(const std::string& m) : std::runtime_error(m) {}
};
struct NonUnitValue : std::runtime_error {
    explicit NonUnitValue(const std::string& m) : std::runtime_error(m) {}
};
struct NonRationalCharacter : std::runtime_error {
    explicit NonRationalCharacter(const std::string& m) : std::runtime_error(m) {}
};

// Extended Kronecker symbol (D|n), defined for all integer pairs.
int kronecker_symbol(long long D, long long n);

// Dirichlet character with the artifact convention chi(n) = 0 whenever
// gcd(n, M) > 1 or n == 0 mod M -- including the modulus-1 character, whose
// value at 0 is 0 here (the literal principal character would give 1).
class DirichletChar {
public:
    enum class Kind { Trivial, Kronecker, Table };

    static DirichletChar trivial(long M = 1);
    static DirichletChar from_kronecker(long D);  // rejects non-discriminants
    static DirichletChar from_table(long M, std::vector<Cyclo> values);

    Kind kind() const { return kind_; }
    long modulus() const { return modulus_; }
    long kronecker_d() const { return D_; }
    int parity() const { return lambda_; }        // chi(-1) = (-1)^parity
    long order() const { return order_; }
    bool is_trivial() const { return kind_ == Kind::Trivial; }
    bool is_odd() const { return lambda_ == 1; }
    bool is_rational_valued() const { return kind_ != Kind::Table || order_ <= 2; }

    Cyclo operator()(long long n) const;
    // fast path, valid when is_rational_valued() and values are in {-1,0,1}
    int sign_at(long long n) const;

    DirichletChar conjugated() const;

    std::string spec_string() const;
    // "kronecker:D" | "trivial:M" | "table:M:v0,v1,..." (v = "p/q" or "zeta(n)^k")
    static DirichletChar parse(const std::string& spec);

    friend bool operator==(const DirichletChar& a, const DirichletChar& b);

private:
    DirichletChar() = default;
    Kind kind_ = Kind::Trivial;
    long modulus_ = 1;
    long D_ = 0;              // Kronecker discriminant, kind Kronecker only
    int lambda_ = 0;
    long order_ = 1;
    std::vector<Cyclo> table_; // kind Table only, size modulus_
};

bool is_fundamental_discriminant(long D);

// The paper's admissible Kronecker set (theta_psi an eta quotient).
const std::vector<long>& kronecker_theta_set();

} // namespace qmock

#endif
