#ifndef QMOCK_JSON_IO_HPP
#define QMOCK_JSON_IO_HPP

#include "qmock/qseries.hpp"
#include "qmock/report.hpp"

#include <json.hpp>

namespace qmock {

// { "conductor": n, "coeffs": ["p/q", ...] }
nlohmann::json cyclo_to_json(const Cyclo& c);
Cyclo cyclo_from_json(const nlohmann::json& j);

// { "den": d, "offset": o, "prec": P, "coeffs": [cyclotomic...] }
nlohmann::json qseries_to_json(const QSeries& s);
QSeries qseries_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& r);

// text format: one coefficient per line, "exponent<TAB>value"
std::string qseries_to_text(const QSeries& s);

} // namespace qmock

#endif
