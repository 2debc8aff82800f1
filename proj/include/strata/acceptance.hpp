#ifndef STRATA_ACCEPTANCE_HPP
#define STRATA_ACCEPTANCE_HPP

#include <functional>
#include <string>
#include <vector>

namespace strata {

// The reproducibility harness: named oracle-backed checks at desk scale,
// each with a wall-clock limit in seconds.  run returns pass/fail and
// fills a one-line detail note.
struct AcceptanceCriterion {
    std::string name;
    double limit_seconds;
    std::function<bool(std::string&)> run;
};

const std::vector<AcceptanceCriterion>& acceptance_criteria();

// Runs one criterion (by position) or all of them, printing one PASS/FAIL
// line each; returns the number of failures.
int run_acceptance(int only = -1);

} // namespace strata

#endif
