#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace primsplit {

enum class CheckStatus { pass, fail, skip };

struct Check {
    std::string name;
    CheckStatus status = CheckStatus::pass;
    std::string details;
};

/// Flat list of named checks; overall passes iff every non-skipped check does.
struct Report {
    std::string subject;
    std::vector<Check> checks;

    void add(std::string name, bool ok, std::string details = "") {
        checks.push_back({std::move(name), ok ? CheckStatus::pass : CheckStatus::fail, std::move(details)});
    }
    void skip(std::string name, std::string details = "") {
        checks.push_back({std::move(name), CheckStatus::skip, std::move(details)});
    }
    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    bool passed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) return false;
        return true;
    }
    std::size_t failure_count() const {
        std::size_t n = 0;
        for (const auto& c : checks) n += c.status == CheckStatus::fail;
        return n;
    }
    std::string first_failure() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) return c.name + (c.details.empty() ? "" : ": " + c.details);
        return "";
    }
};

/// A verification that is unconditionally guaranteed by construction failed;
/// this indicates an arithmetic bug, not bad input.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace primsplit
