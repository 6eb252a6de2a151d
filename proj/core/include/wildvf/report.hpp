#ifndef WILDVF_REPORT_HPP
#define WILDVF_REPORT_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace wildvf {

struct Check {
    std::string name;
    bool passed = true;
    std::optional<std::size_t> index;  // 1-based offender, when one exists
    std::string detail;

    friend bool operator==(const Check&, const Check&) = default;
};

/// Outcome of a verifier: one entry per named check, failures carry the
/// first offending index.
struct VerificationReport {
    std::vector<Check> checks;

    void pass(std::string name) { checks.push_back({std::move(name), true, std::nullopt, {}}); }
    void fail(std::string name, std::optional<std::size_t> index, std::string detail) {
        checks.push_back({std::move(name), false, index, std::move(detail)});
    }

    bool ok() const noexcept {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
    }
    const Check* first_failure() const noexcept {
        auto it = std::find_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; });
        return it == checks.end() ? nullptr : &*it;
    }

    friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

}  // namespace wildvf

#endif
