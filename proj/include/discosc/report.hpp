#pragma once

#include <map>
#include <string>
#include <vector>

#include "discosc/disc_point.hpp"

namespace discosc {

/// Structured verdict of one theorem/diagnostic check. `pass` means
/// worst_margin >= -slack (the slack used is recorded in parameters);
/// `diagnostic` marks grid-sup based estimates that cannot certify failure.
struct VerificationReport {
    enum class Verdict { Pass, Fail, Diagnostic };

    std::string name;
    Verdict verdict = Verdict::Diagnostic;
    double worst_margin = 0.0;
    std::vector<cplx> worst_points;
    std::map<std::string, double> parameters;
    std::string note;

    bool passed() const { return verdict != Verdict::Fail; }

    static const char* verdict_name(Verdict v) {
        switch (v) {
            case Verdict::Pass: return "pass";
            case Verdict::Fail: return "fail";
            default: return "diagnostic";
        }
    }
};

}  // namespace discosc
