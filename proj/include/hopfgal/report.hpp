#pragma once

#include <string>
#include <vector>

namespace hopfgal {

struct Check {
    std::string name;
    bool passed = true;
    std::string detail;  // failing witness, or extra information on success
};

struct Report {
    std::vector<Check> checks;

    void add(std::string name, bool passed, std::string detail = {}) {
        checks.push_back(Check{std::move(name), passed, std::move(detail)});
    }
    void append(const Report& other, const std::string& prefix = {}) {
        for (const Check& c : other.checks) checks.push_back(Check{prefix + c.name, c.passed, c.detail});
    }
    bool passed() const {
        for (const Check& c : checks)
            if (!c.passed) return false;
        return true;
    }
    const Check* first_failure() const {
        for (const Check& c : checks)
            if (!c.passed) return &c;
        return nullptr;
    }
};

}  // namespace hopfgal
