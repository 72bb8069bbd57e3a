#include "qmock/character.hpp"

#include <numeric>
#include <sstream>

namespace qmock {

int kronecker_symbol(long long D, long long n) {
    if (n == 0) return (D == 1 || D == -1) ? 1 : 0;
    int res = 1;
    if (n < 0) {
        n = -n;
        if (D < 0) res = -res;
    }
    while (n % 2 == 0) {
        n /= 2;
        if (D % 2 == 0) return 0;
        long long d8 = ((D % 8) + 8) % 8;
        if (d8 == 3 || d8 == 5) res = -res;
    }
    // Jacobi symbol (D mod n | n), n odd positive
    long long num = ((D % n) + n) % n, den = n;
    while (num != 0) {
        while (num % 2 == 0) {
            num /= 2;
            if (den % 8 == 3 || den % 8 == 5) res = -res;
        }
        std::swap(num, den);
        if (num % 4 == 3 && den % 4 == 3) res = -res;
        num %= den;
    }
    return den == 1 ? res : 0;
}

bool is_fundamental_discriminant(long D) {
    if (D == 0) return false;
    auto squarefree = [](long m) {
        if (m < 0) m = -m;
        for (long p = 2; p * p <= m; ++p)
            if (m % (p * p) == 0) return false;
        return true;
    };
    long r4 = ((D % 4) + 4) % 4;
    if (r4 == 1) return squarefree(D);
    if (r4 == 0) {
        long m = D / 4;
        long mr = ((m % 4) + 4) % 4;
        return (mr == 2 || mr == 3) && squarefree(m);
    }
    return false;
}

const std::vector<long>& kronecker_theta_set() {
    static const std::vector<long> psi_set{-8, -4, -3, 2, 12, 24};
    return psi_set;
}

DirichletChar DirichletChar::trivial(long M) {
    if (M < 1) throw std::invalid_argument("modulus must be >= 1");
    DirichletChar c;
    c.kind_ = Kind::Trivial;
    c.modulus_ = M;
    c.lambda_ = 0;
    c.order_ = 1;
    return c;
}

DirichletChar DirichletChar::from_kronecker(long D) {
    bool in_set = false;
    for (long x : kronecker_theta_set())
        if (x == D) in_set = true;
    if (!in_set && !is_fundamental_discriminant(D) && D != 1)
        throw std::invalid_argument("not a fundamental discriminant: " + std::to_string(D));
    DirichletChar c;
    if (D == 1) return trivial(1);
    c.kind_ = Kind::Kronecker;
    c.D_ = D;
    c.modulus_ = D == 2 ? 8 : (D < 0 ? -D : D); // (2|.) has conductor 8
    c.lambda_ = kronecker_symbol(D, c.modulus_ - 1) == -1 ? 1 : 0;
    c.order_ = 2;
    return c;
}

DirichletChar DirichletChar::from_table(long M, std::vector<Cyclo> values) {
    if (M < 1 || (long)values.size() != M)
        throw std::invalid_argument("table size must equal modulus");
    if (M == 1) {
        if (!values[0].is_one()) throw NonMultiplicative("chi(1) != 1");
        return trivial(1);
    }
    for (long a = 0; a < M; ++a) {
        bool unit = std::gcd(a, M) == 1;
        if (!unit && !values[a].is_zero())
            throw NonUnitValue("nonzero value at non-unit residue " + std::to_string(a));
        if (unit && values[a].is_zero())
            throw NonUnitValue("zero value at unit residue " + std::to_string(a));
    }
    if (!values[1].is_one())
        throw NonMultiplicative("chi(1) != 1");
    for (long a = 0; a < M; ++a) {
        if (std::gcd(a, M) != 1) continue;
        for (long b = a; b < M; ++b) {
            if (std::gcd(b, M) != 1) continue;
            if (values[(a * b) % M] != values[a] * values[b])
                throw NonMultiplicative("chi(" + std::to_string(a) + ")chi(" + std::to_string(b) +
                                        ") != chi(" + std::to_string((a * b) % M) + ")");
        }
    }
    // orders of unit values; multiplicativity already forces roots of unity,
    // the cap is a guard against malformed cyclotomic input
    long order = 1;
    for (long a = 0; a < M; ++a) {
        if (values[a].is_zero()) continue;
        Cyclo pw = values[a];
        long k = 1;
        while (!pw.is_one()) {
            pw *= values[a];
            if (++k > 4 * M * M)
                throw NonUnitValue("value at " + std::to_string(a) + " is not a root of unity");
        }
        order = lcm_long(order, k);
    }
    DirichletChar c;
    c.kind_ = Kind::Table;
    c.modulus_ = M;
    c.table_ = std::move(values);
    c.order_ = order;
    long minus1 = (M - 1) % M;
    const Cyclo& v = c.table_[M == 1 ? 0 : minus1];
    c.lambda_ = v.is_rational() && v.rational_value() == -1 ? 1 : 0;
    // principal-table case: all unit values 1
    bool principal = true;
    for (const auto& x : c.table_)
        if (!x.is_zero() && !x.is_one()) principal = false;
    if (principal) {
        c.kind_ = Kind::Trivial;
        c.table_.clear();
        c.order_ = 1;
    }
    return c;
}

Cyclo DirichletChar::operator()(long long n) const {
    if (kind_ == Kind::Table) {
        long long r = ((n % modulus_) + modulus_) % modulus_;
        if (modulus_ == 1) return n == 0 ? Cyclo(Rational(0)) : table_[0];
        return table_[r];
    }
    return Cyclo(Rational(sign_at(n)));
}

int DirichletChar::sign_at(long long n) const {
    switch (kind_) {
    case Kind::Trivial: {
        if (n == 0) return 0; // chi(0) := 0 also for modulus 1
        long long r = ((n % modulus_) + modulus_) % modulus_;
        return std::gcd(r, (long long)modulus_) == 1 ? 1 : 0;
    }
    case Kind::Kronecker:
        return kronecker_symbol(D_, n);
    case Kind::Table: {
        Cyclo v = (*this)(n);
        if (v.is_zero()) return 0;
        if (v.is_rational()) {
            if (v.rational_value() == 1) return 1;
            if (v.rational_value() == -1) return -1;
        }
        throw std::domain_error("character value is not in {-1,0,1}");
    }
    }
    return 0;
}

DirichletChar DirichletChar::conjugated() const {
    if (kind_ != Kind::Table) return *this;
    DirichletChar c = *this;
    for (auto& v : c.table_) v = v.conj();
    return c;
}

std::string DirichletChar::spec_string() const {
    switch (kind_) {
    case Kind::Trivial:
        return "trivial:" + std::to_string(modulus_);
    case Kind::Kronecker:
        return "kronecker:" + std::to_string(D_);
    case Kind::Table: {
        std::ostringstream os;
        os << "table:" << modulus_ << ":";
        for (long a = 0; a < modulus_; ++a) {
            if (a) os << ",";
            os << table_[a].str();
        }
        return os.str();
    }
    }
    return "";
}

namespace {

Cyclo parse_scalar(const std::string& s) {
    if (s.rfind("zeta(", 0) == 0) {
        size_t close = s.find(')');
        if (close == std::string::npos) throw std::invalid_argument("bad scalar: " + s);
        long n = std::stol(s.substr(5, close - 5));
        long k = 1;
        if (close + 1 < s.size()) {
            if (s[close + 1] != '^') throw std::invalid_argument("bad scalar: " + s);
            k = std::stol(s.substr(close + 2));
        }
        return Cyclo::root(n, k);
    }
    return Cyclo(parse_rational(s));
}

} // namespace

DirichletChar DirichletChar::parse(const std::string& spec) {
    size_t c1 = spec.find(':');
    if (c1 == std::string::npos) throw std::invalid_argument("bad character spec: " + spec);
    std::string head = spec.substr(0, c1);
    if (head == "kronecker")
        return from_kronecker(std::stol(spec.substr(c1 + 1)));
    if (head == "trivial")
        return trivial(std::stol(spec.substr(c1 + 1)));
    if (head == "table") {
        size_t c2 = spec.find(':', c1 + 1);
        if (c2 == std::string::npos) throw std::invalid_argument("bad table spec: " + spec);
        long M = std::stol(spec.substr(c1 + 1, c2 - c1 - 1));
        std::vector<Cyclo> vals;
        std::string rest = spec.substr(c2 + 1);
        std::istringstream is(rest);
        std::string tok;
        while (std::getline(is, tok, ','))
            vals.push_back(parse_scalar(tok));
        return from_table(M, std::move(vals));
    }
    throw std::invalid_argument("unknown character kind: " + head);
}

bool operator==(const DirichletChar& a, const DirichletChar& b) {
    if (a.modulus_ != b.modulus_) return false;
    for (long n = 0; n < a.modulus_; ++n)
        if (a(n) != b(n)) return false;
    return true;
}

} // namespace qmock
