#ifndef QMOCK_REPORT_HPP
#define QMOCK_REPORT_HPP

#include <map>
#include <optional>
#include <string>

namespace qmock {

// Outcome of one identity harness.  A fail always carries a concrete witness
// (exponent plus both values, or a numeric residual).
struct VerificationReport {
    enum class Status { Pass, Fail, Skipped };

    std::string name;
    std::map<std::string, std::string> params;
    Status status = Status::Pass;
    std::string range;            // verified coefficient range / grid
    std::string witness;          // first counterexample, empty on pass
    std::optional<double> residual;

    bool passed() const { return status == Status::Pass; }
    std::string status_str() const;
    std::string line() const;     // one printable summary line

    static VerificationReport pass(std::string name, std::string range);
    static VerificationReport fail(std::string name, std::string range, std::string witness);
    static VerificationReport skipped(std::string name, std::string why);
};

} // namespace qmock

#endif
