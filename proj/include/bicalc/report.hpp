#ifndef BICALC_REPORT_HPP
#define BICALC_REPORT_HPP

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"

namespace bicalc {

/// One verified identity: both sides in normal form and whether they agree.
struct Check {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool pass = false;
};

struct Report {
    std::string suite;
    std::vector<Check> checks;
    std::vector<std::string> notes;
    std::array<std::string, 3> headers{"check", "lhs", "rhs"};

    void add(std::string name, std::string lhs, std::string rhs, bool pass) {
        checks.push_back({std::move(name), std::move(lhs), std::move(rhs), pass});
    }
    /// Records an equality check; both sides are compared as rendered.
    void add_equal(std::string name, std::string lhs, std::string rhs) {
        bool pass = lhs == rhs;
        add(std::move(name), std::move(lhs), std::move(rhs), pass);
    }
    void append(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
        notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    }

    std::size_t passed() const {
        return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }));
    }
    std::size_t failed() const { return checks.size() - passed(); }
    bool ok() const { return failed() == 0; }
};

inline nlohmann::json to_json(const Report& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"lhs", c.lhs}, {"rhs", c.rhs}, {"pass", c.pass}});
    nlohmann::json j = {{"checks", checks}, {"passed", r.passed()}, {"failed", r.failed()}};
    if (!r.suite.empty()) j["suite"] = r.suite;
    if (!r.notes.empty()) j["notes"] = r.notes;
    return j;
}

inline std::string emit_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

inline std::string emit_text(const Report& r) {
    std::string out;
    if (!r.suite.empty()) out += "suite: " + r.suite + "\n";
    out += r.headers[0] + " | " + r.headers[1] + " | " + r.headers[2] + " | pass\n";
    for (const auto& c : r.checks)
        out += c.name + " | " + c.lhs + " | " + c.rhs + " | " + (c.pass ? "PASS" : "FAIL") + "\n";
    for (const auto& n : r.notes) out += "note: " + n + "\n";
    out += std::to_string(r.passed()) + " passed, " + std::to_string(r.failed()) + " failed\n";
    return out;
}

}  // namespace bicalc

#endif
