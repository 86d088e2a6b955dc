#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace wittkit {

// One line of a theorem-verification report.
struct TheoremCheck {
    enum class Status { Pass, Fail, Skipped, Unsupported };
    std::string name;
    Status status = Status::Pass;
    std::string detail;  // witnesses in form-literal syntax on failure
};

struct TheoremReport {
    std::string title;
    std::vector<TheoremCheck> checks;

    void pass(std::string name, std::string detail = "") {
        checks.push_back({std::move(name), TheoremCheck::Status::Pass, std::move(detail)});
    }
    void fail(std::string name, std::string detail = "") {
        checks.push_back({std::move(name), TheoremCheck::Status::Fail, std::move(detail)});
    }
    void skip(std::string name, std::string detail = "") {
        checks.push_back({std::move(name), TheoremCheck::Status::Skipped, std::move(detail)});
    }
    void unsupported(std::string name, std::string detail = "") {
        checks.push_back({std::move(name), TheoremCheck::Status::Unsupported, std::move(detail)});
    }
    void check(std::string name, bool ok, std::string detail = "") {
        if (ok)
            pass(std::move(name), std::move(detail));
        else
            fail(std::move(name), std::move(detail));
    }

    bool all_pass() const {
        for (const auto& c : checks)
            if (c.status == TheoremCheck::Status::Fail) return false;
        return true;
    }

    void merge(const TheoremReport& o) {
        for (const auto& c : o.checks) checks.push_back(c);
    }
};

inline const char* to_string(TheoremCheck::Status s) {
    switch (s) {
        case TheoremCheck::Status::Pass: return "PASS";
        case TheoremCheck::Status::Fail: return "FAIL";
        case TheoremCheck::Status::Skipped: return "SKIPPED";
        case TheoremCheck::Status::Unsupported: return "UNSUPPORTED";
    }
    return "?";
}

inline std::ostream& operator<<(std::ostream& os, const TheoremReport& r) {
    if (!r.title.empty()) os << "== " << r.title << " ==\n";
    for (const auto& c : r.checks) {
        os << to_string(c.status) << "  " << c.name;
        if (!c.detail.empty()) os << "  [" << c.detail << "]";
        os << "\n";
    }
    return os;
}

}  // namespace wittkit
