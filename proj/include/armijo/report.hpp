#pragma once

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "armijo/audits.hpp"
#include "armijo/bounds.hpp"
#include "armijo/core.hpp"

namespace armijo {

// %.17g; the process never touches the locale, so '.' stays the decimal
// separator and output is byte-stable across runs.
std::string format_double(double v);

// Header is part of the contract:
// iter,r_value,grad_norm,eta,backtracks,func_evals,grad_evals
void write_trace_csv(std::ostream& os, const RunTrace& trace);

// {terminated_by, iterations, final_grad_norm, final_r, counters}
nlohmann::json run_summary_json(const RunTrace& trace);

nlohmann::json audit_json(const AuditReport& report);
nlohmann::json bound_entry_json(const BoundReportEntry& entry);

}  // namespace armijo
