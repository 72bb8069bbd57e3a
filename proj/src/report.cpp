#include "qmock/report.hpp"

#include <sstream>

namespace qmock {

std::string VerificationReport::status_str() const {
    switch (status) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    }
    return "?";
}

std::string VerificationReport::line() const {
    std::ostringstream os;
    os << (status == Status::Pass ? "PASS" : status == Status::Fail ? "FAIL" : "SKIP");
    os << " " << name;
    if (!params.empty()) {
        os << " [";
        bool first = true;
        for (const auto& [k, v] : params) {
            if (!first) os << " ";
            first = false;
            os << k << "=" << v;
        }
        os << "]";
    }
    if (!range.empty()) os << " " << range;
    if (residual) os << " residual=" << *residual;
    if (!witness.empty()) os << " witness: " << witness;
    return os.str();
}

VerificationReport VerificationReport::pass(std::string name, std::string range) {
    VerificationReport r;
    r.name = std::move(name);
    r.range = std::move(range);
    r.status = Status::Pass;
    return r;
}

VerificationReport VerificationReport::fail(std::string name, std::string range, std::string witness) {
    VerificationReport r;
    r.name = std::move(name);
    r.range = std::move(range);
    r.witness = std::move(witness);
    r.status = Status::Fail;
    return r;
}

VerificationReport VerificationReport::skipped(std::string name, std::string why) {
    VerificationReport r;
    r.name = std::move(name);
    r.witness = std::move(why);
    r.status = Status::Skipped;
    return r;
}

} // namespace qmock
