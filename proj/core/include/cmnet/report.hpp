#ifndef CMNET_REPORT_HPP
#define CMNET_REPORT_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace cmnet {

/// One verifier evaluation. A record with a skip reason is neither pass nor failure.
struct CheckRecord {
    std::string theorem;
    std::string instance;
    std::string prime;
    std::string index;
    std::string lhs;
    std::string rhs;
    bool pass = false;
    std::optional<std::string> skip_reason;

    bool skipped() const { return skip_reason.has_value(); }
    bool failed() const { return !pass && !skipped(); }
};

/// Informational discrepancy note with the evidence gathered on this instance.
struct Finding {
    std::string id;
    std::string note;
    std::string evidence;
    bool applicable = true;
    bool confirmed = false;
};

class Report {
public:
    void add(CheckRecord rec) { checks_.push_back(std::move(rec)); }
    void add(Finding f) { findings_.push_back(std::move(f)); }
    void append(const Report& other);

    const std::vector<CheckRecord>& checks() const { return checks_; }
    const std::vector<Finding>& findings() const { return findings_; }

    std::size_t passed() const;
    std::size_t failed() const;
    std::size_t skipped() const;
    // failures plus applicable findings whose resolution did not hold up
    bool ok() const;

    // with full = false only failures and skips are listed
    std::string to_json(bool full = true) const;
    std::string summary() const;

private:
    std::vector<CheckRecord> checks_;
    std::vector<Finding> findings_;
};

}  // namespace cmnet

#endif
