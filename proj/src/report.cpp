#include "armijo/report.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace armijo {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_trace_csv(std::ostream& os, const RunTrace& trace) {
    os << "iter,r_value,grad_norm,eta,backtracks,func_evals,grad_evals\n";
    for (const auto& rec : trace.records) {
        os << rec.iter << ',' << format_double(rec.r_value) << ',' << format_double(rec.grad_norm)
           << ',' << format_double(rec.eta) << ',' << rec.backtracks << ','
           << rec.counters.func_evals << ',' << rec.counters.grad_evals << '\n';
    }
}

nlohmann::json run_summary_json(const RunTrace& trace) {
    if (trace.records.empty()) throw InvalidInput("summary: empty trace");
    const auto& last = trace.records.back();
    return nlohmann::json{
        {"terminated_by", to_string(trace.terminated_by)},
        {"iterations", trace.iterations()},
        {"final_grad_norm", last.grad_norm},
        {"final_r", last.r_value},
        {"counters",
         {{"func_evals", last.counters.func_evals}, {"grad_evals", last.counters.grad_evals}}},
    };
}

namespace {

// JSON has no Inf/NaN literals; nlohmann would emit them as null anyway,
// so make the substitution explicit and keep the numeric field numeric.
nlohmann::json finite_or_null(double v) {
    if (std::isfinite(v)) return v;
    return nullptr;
}

}  // namespace

nlohmann::json audit_json(const AuditReport& report) {
    return nlohmann::json{
        {"name", report.name},
        {"samples", report.samples},
        {"violations", report.violations},
        {"worst_margin", finite_or_null(report.worst_margin)},
        {"applicable", report.applicable},
        {"pass", report.pass},
        {"seed", report.seed},
        {"note", report.note},
    };
}

nlohmann::json bound_entry_json(const BoundReportEntry& entry) {
    nlohmann::json j{
        {"name", entry.name},
        {"value", finite_or_null(entry.bound.value)},
        {"applicable", entry.bound.applicable},
        {"note", entry.bound.note},
        {"inputs", entry.inputs},
    };
    if (entry.measured_iterations) j["measured_iterations"] = *entry.measured_iterations;
    if (entry.measured_func_evals) j["measured_func_evals"] = *entry.measured_func_evals;
    if (entry.measured_grad_evals) j["measured_grad_evals"] = *entry.measured_grad_evals;
    return j;
}

}  // namespace armijo
