#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gpc {

/// Offending inputs plus both sides of the failed identity, all exact strings.
struct Witness {
    std::string input;
    std::string lhs;
    std::string rhs;
};

struct ConditionResult {
    std::string label;
    bool pass = true;
    std::optional<Witness> witness;
    std::string note; // convention caveats worth surfacing next to the verdict
};

/// Structured pass/fail result of one check suite over one structure.
struct CheckReport {
    std::string subject;
    std::vector<ConditionResult> conditions;
    std::string classification; // set by the classify suite

    bool passed() const {
        for (const auto& c : conditions)
            if (!c.pass) return false;
        return true;
    }

    ConditionResult& add(const std::string& label) {
        conditions.push_back(ConditionResult{label, true, std::nullopt, {}});
        return conditions.back();
    }

    void fail(ConditionResult& c, const std::string& input, const std::string& lhs, const std::string& rhs) {
        if (!c.pass) return; // keep the first witness; sweeps run in frame order
        c.pass = false;
        c.witness = Witness{input, lhs, rhs};
    }

    void merge(const CheckReport& other) {
        for (const auto& c : other.conditions) conditions.push_back(c);
        if (classification.empty()) classification = other.classification;
    }

    const ConditionResult* find(const std::string& label) const {
        for (const auto& c : conditions)
            if (c.label == label) return &c;
        return nullptr;
    }
};

} // namespace gpc
