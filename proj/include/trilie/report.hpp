#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace trilie {

// Outcome of one mechanical check. A failing check is a finding, so `detail`
// carries the first counterexample witness found.
struct Check {
    std::string name;
    bool passed = true;
    std::string detail;
    bool sampled = false;  // true when the check ran on a random sample, not exhaustively
};

class CheckReport {
public:
    void add(std::string name, bool passed, std::string detail = {}, bool sampled = false) {
        checks_.push_back({std::move(name), passed, std::move(detail), sampled});
    }

    void add(Check c) { checks_.push_back(std::move(c)); }

    // Appends every check of `other`, prefixing its name.
    void merge(const std::string& prefix, const CheckReport& other) {
        for (const auto& c : other.checks_) {
            checks_.push_back({prefix + c.name, c.passed, c.detail, c.sampled});
        }
    }

    bool all_passed() const {
        return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
    }

    std::size_t failures() const {
        return static_cast<std::size_t>(
            std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.passed; }));
    }

    const std::vector<Check>& checks() const { return checks_; }

    const Check* find(const std::string& name) const {
        for (const auto& c : checks_) {
            if (c.name == name) {
                return &c;
            }
        }
        return nullptr;
    }

private:
    std::vector<Check> checks_;
};

// Accumulates a conjunction over many cases, remembering the first failure.
class Tally {
public:
    void record(bool ok, const std::string& witness) {
        ++cases_;
        if (!ok && passed_) {
            passed_ = false;
            witness_ = witness;
        }
    }

    template <typename WitnessFn>
    void record_lazy(bool ok, WitnessFn&& witness) {
        ++cases_;
        if (!ok && passed_) {
            passed_ = false;
            witness_ = witness();
        }
    }

    bool passed() const { return passed_; }
    std::size_t cases() const { return cases_; }

    Check to_check(std::string name, bool sampled = false) const {
        std::string detail = passed_ ? std::to_string(cases_) + " cases" : witness_;
        return {std::move(name), passed_, std::move(detail), sampled};
    }

private:
    bool passed_ = true;
    std::size_t cases_ = 0;
    std::string witness_;
};

} // namespace trilie
