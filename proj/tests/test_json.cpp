#include "qmock/arith.hpp"
#include "qmock/json_io.hpp"

#include <doctest.h>

using namespace qmock;

TEST_CASE("cyclotomic JSON round trip") {
    Cyclo a = Cyclo::root(12, 5) + Cyclo(rat(3, 7));
    Cyclo b = cyclo_from_json(cyclo_to_json(a));
    CHECK(a == b);
    nlohmann::json j = cyclo_to_json(a);
    CHECK(j["conductor"] == 12);
    CHECK(j["coeffs"].size() == 4); // phi(12)
}

TEST_CASE("qseries JSON round trip") {
    DirichletChar m4 = DirichletChar::from_kronecker(-4);
    QSeries t = theta_series(m4, 40);
    QSeries u = qseries_from_json(qseries_to_json(t));
    CHECK(u.den() == t.den());
    CHECK(u.prec() == t.prec());
    CHECK(QSeries::equal_to_shared_prec(t, u));
    CHECK(!QSeries::first_mismatch(t, u));

    QSeries frac = QSeries::monomial(Cyclo(rat(1, 3)), -3, 8, 21);
    QSeries back = qseries_from_json(qseries_to_json(frac));
    CHECK(back.den() == 8);
    CHECK(back.coeff(rat(-3, 8)) == Cyclo(rat(1, 3)));
}

TEST_CASE("text format lists exponent-value pairs") {
    QSeriesBuilder b(1, 10);
    b.add(2, Cyclo(Rational(5)));
    b.add(7, Cyclo(rat(-1, 2)));
    std::string text = qseries_to_text(b.build());
    CHECK(text.find("2\t5") != std::string::npos);
    CHECK(text.find("7\t-1/2") != std::string::npos);
}

TEST_CASE("report JSON carries the witness") {
    auto rep = VerificationReport::fail("demo", "to q^10", "exponent 3: 1 vs 2");
    auto j = report_to_json(rep);
    CHECK(j["status"] == "fail");
    CHECK(j["witness"] == "exponent 3: 1 vs 2");
}
