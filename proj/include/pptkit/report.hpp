// report.hpp — ordered pass/fail/inconclusive check lists with numeric witnesses.

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace pptkit {

enum class CheckStatus { pass, fail, inconclusive };

struct ReportCheck {
    std::string name;
    CheckStatus status = CheckStatus::inconclusive;
    std::vector<std::pair<std::string, double>> witnesses;
    std::string note;
};

struct VerificationReport {
    std::vector<ReportCheck> checks;

    // Informational checks (status inconclusive) do not gate the outcome.
    bool passed() const {
        for (const auto& c : checks)
            if (c.status == CheckStatus::fail) return false;
        return true;
    }
};

const char* to_string(CheckStatus s);

// One line per check, human-readable.
std::string to_text(const VerificationReport& report);

}  // namespace pptkit
