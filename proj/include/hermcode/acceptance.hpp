#pragma once

#include <string>
#include <vector>

namespace hermcode {

// One line of the acceptance report.  A skipped check still passes; detail
// carries the observed numbers either way.
struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    unsigned threads = 1;
    // Includes the q = 9 exhaustive spectrum (hundreds of millions of
    // classes); off by default.
    bool heavy = false;
};

// Runs the twelve desk-scale checks in order.  Each check is independent:
// an exception inside one fails that line only.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts = {});

bool all_passed(const std::vector<CriterionResult>& results);

// "[PASS] 01 rational-point-counts (0.02 s): ..." one line per criterion.
std::string format_result(const CriterionResult& r);

}  // namespace hermcode
