#pragma once

// Named check results; one entry per verified statement, with a concrete
// witness string on failure.

#include <string>
#include <vector>

namespace movoid {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // counts on success, witness on failure
};

struct Report {
    std::vector<CheckResult> checks;

    void add(CheckResult c) { checks.push_back(std::move(c)); }
    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.passed) return false;
        return true;
    }
    const CheckResult* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

} // namespace movoid
