#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

namespace ilw {

struct AcceptanceOptions {
    bool quick = false; // reduced Monte-Carlo budgets, same criteria
    int only_id = 0;    // 0 = run everything
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    std::function<CriterionResult(const AcceptanceOptions&)> run;
};

/// The fourteen acceptance criteria, in order.
const std::vector<Criterion>& acceptance_criteria();

/// Runs the suite, printing one pass/fail line per criterion.
/// Returns the per-criterion results; overall pass = all pass.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt, std::ostream& out);

} // namespace ilw
