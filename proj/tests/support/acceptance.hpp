#ifndef TWISTFLOER_ACCEPTANCE_HPP
#define TWISTFLOER_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace twistfloer::verification {

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;       // filled on failure (or informative numbers)
    double seconds = 0.0;
    double budget_seconds = 0.0;
};

/// Run the whole self-check suite. Every tolerance and threshold is
/// pinned in the implementation.
std::vector<CriterionResult> run_all();

/// Run and print one pass/fail line per criterion; returns 0 when all
/// criteria pass.
int run_and_print(std::ostream& os);

}  // namespace twistfloer::verification

#endif
