#include "pptkit/report.hpp"

#include <iomanip>
#include <sstream>

namespace pptkit {

const char* to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::string to_text(const VerificationReport& report) {
    std::ostringstream out;
    for (const auto& c : report.checks) {
        out << std::left << std::setw(13) << to_string(c.status) << c.name;
        if (!c.witnesses.empty()) {
            out << "  [";
            for (std::size_t i = 0; i < c.witnesses.size(); ++i) {
                if (i) out << ", ";
                out << c.witnesses[i].first << "=" << std::setprecision(6)
                    << c.witnesses[i].second;
            }
            out << "]";
        }
        if (!c.note.empty()) out << "  -- " << c.note;
        out << "\n";
    }
    out << (report.passed() ? "RESULT: pass" : "RESULT: fail") << "\n";
    return out.str();
}

}  // namespace pptkit
