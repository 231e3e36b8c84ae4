#pragma once

#include <string>
#include <vector>

#include "armijo/audits.hpp"
#include "armijo/bounds.hpp"

namespace armijo {

struct CriterionOutcome {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Everything the acceptance gate needs: one outcome per criterion, the
// underlying audit reports, and the bound-vs-measured comparisons.
struct SuiteReport {
    std::vector<CriterionOutcome> criteria;
    std::vector<AuditReport> audits;
    BoundReport bounds;
    bool all_pass = false;
};

// Runs the acceptance suite. `only` filters by substring against criterion
// and audit names (empty selects everything); all_pass covers the selected
// criteria. Deterministic: every sampling seed is fixed and recorded.
SuiteReport run_verification_suite(const std::vector<std::string>& only = {});

}  // namespace armijo
