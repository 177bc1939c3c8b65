#include "cmnet/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace cmnet {

void Report::append(const Report& other)
{
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
    findings_.insert(findings_.end(), other.findings_.begin(), other.findings_.end());
}

std::size_t Report::passed() const
{
    return std::count_if(checks_.begin(), checks_.end(), [](const CheckRecord& c) { return c.pass && !c.skipped(); });
}

std::size_t Report::failed() const
{
    return std::count_if(checks_.begin(), checks_.end(), [](const CheckRecord& c) { return c.failed(); });
}

std::size_t Report::skipped() const
{
    return std::count_if(checks_.begin(), checks_.end(), [](const CheckRecord& c) { return c.skipped(); });
}

bool Report::ok() const
{
    if (failed() != 0) {
        return false;
    }
    return std::all_of(findings_.begin(), findings_.end(),
                       [](const Finding& f) { return !f.applicable || f.confirmed; });
}

std::string Report::to_json(bool full) const
{
    using nlohmann::ordered_json;
    ordered_json checks = ordered_json::array();
    for (const CheckRecord& c : checks_) {
        if (!full && !c.failed() && !c.skipped()) {
            continue;
        }
        ordered_json j;
        j["theorem"] = c.theorem;
        j["instance"] = c.instance;
        j["prime"] = c.prime;
        j["index"] = c.index;
        j["lhs"] = c.lhs;
        j["rhs"] = c.rhs;
        j["pass"] = c.pass;
        if (c.skip_reason) {
            j["skip_reason"] = *c.skip_reason;
        }
        checks.push_back(std::move(j));
    }
    ordered_json findings = ordered_json::array();
    for (const Finding& f : findings_) {
        findings.push_back(ordered_json{{"id", f.id},
                                        {"note", f.note},
                                        {"evidence", f.evidence},
                                        {"applicable", f.applicable},
                                        {"confirmed", f.confirmed}});
    }
    ordered_json root;
    root["summary"] = ordered_json{{"passed", passed()}, {"failed", failed()}, {"skipped", skipped()}, {"ok", ok()}};
    root["checks"] = std::move(checks);
    root["findings"] = std::move(findings);
    return root.dump(2);
}

std::string Report::summary() const
{
    std::ostringstream os;
    os << "passed " << passed() << ", failed " << failed() << ", skipped " << skipped();
    if (!findings_.empty()) {
        os << ", findings " << findings_.size();
    }
    return os.str();
}

}  // namespace cmnet
