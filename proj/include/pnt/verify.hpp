#pragma once

#include <string>
#include <vector>

namespace pnt::verify {

enum class CheckKind { hard, envelope };

struct CheckResult {
    std::string id;
    std::string name;
    CheckKind kind = CheckKind::hard;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the acceptance checks for one suite: "rational", "zeta", "gaussian",
// "hecke", "cli", or "all".  HARD checks are exact identities and rigorous
// inequalities; ENVELOPE checks pin the measured constants behind each
// asymptotic statement.
std::vector<CheckResult> run_suite(const std::string& suite);

bool all_passed(const std::vector<CheckResult>& results);

// One formatted line per check, e.g. "[HARD]     ok  factorial-identity ...".
std::string format_line(const CheckResult& r);

// Independent reference for li(x): fixed-panel composite Simpson on three
// smooth exponential-substituted pieces.  Kept apart from the adaptive
// excision path it audits.
double li_reference_quadrature(double x);

}  // namespace pnt::verify
