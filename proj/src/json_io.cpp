#include "qmock/json_io.hpp"

#include <sstream>

namespace qmock {

nlohmann::json cyclo_to_json(const Cyclo& c) {
    nlohmann::json j;
    j["conductor"] = c.conductor();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : c.coeffs()) arr.push_back(rat_str(r));
    j["coeffs"] = arr;
    return j;
}

Cyclo cyclo_from_json(const nlohmann::json& j) {
    long n = j.at("conductor").get<long>();
    std::vector<Rational> coeffs;
    for (const auto& x : j.at("coeffs")) coeffs.push_back(parse_rational(x.get<std::string>()));
    return Cyclo::from_coeffs(n, std::move(coeffs));
}

nlohmann::json qseries_to_json(const QSeries& s) {
    nlohmann::json j;
    j["den"] = s.den();
    j["offset"] = s.offset();
    j["prec"] = s.prec();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : s.coeffs()) arr.push_back(cyclo_to_json(c));
    j["coeffs"] = arr;
    return j;
}

QSeries qseries_from_json(const nlohmann::json& j) {
    long den = j.at("den").get<long>();
    long offset = j.at("offset").get<long>();
    long prec = j.at("prec").get<long>();
    QSeries s = QSeries::zero(prec, den);
    const auto& arr = j.at("coeffs");
    long e = offset;
    for (const auto& cj : arr) {
        Cyclo c = cyclo_from_json(cj);
        if (!c.is_zero()) s += QSeries::monomial(c, e, den, prec);
        ++e;
    }
    return s;
}

nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json j;
    j["name"] = r.name;
    j["status"] = r.status_str();
    j["params"] = r.params;
    j["range"] = r.range;
    if (!r.witness.empty()) j["witness"] = r.witness;
    if (r.residual) j["residual"] = *r.residual;
    return j;
}

std::string qseries_to_text(const QSeries& s) {
    std::ostringstream os;
    for (long e = s.offset(); e < s.prec(); ++e) {
        Cyclo c = s.coeff_num(e);
        if (c.is_zero()) continue;
        if (s.den() == 1)
            os << e;
        else
            os << e << "/" << s.den();
        os << "\t" << c.str() << "\n";
    }
    return os.str();
}

} // namespace qmock
