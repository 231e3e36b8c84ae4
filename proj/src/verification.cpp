#include "armijo/verification.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <utility>

#include "armijo/linesearch.hpp"
#include "armijo/optimizers.hpp"
#include "armijo/problems.hpp"

namespace armijo {

namespace {

// Frozen oracle values, computed independently at high precision before the
// formulas were implemented. The two *Quoted values are the coarser
// hand-arithmetic figures the criteria cite to 4 significant digits.
constexpr double kOracleIterBound = 899.85183233758260;   // L0=L1=delta=1, eps=0.1
constexpr double kOracleIterBoundQuoted = 899.9;
constexpr double kOracleAsymptotic = 800.0;
constexpr double kOracleTildeEta = 0.22314355131420976;   // ln(5/4)
constexpr double kOracleHThreshold = 0.69314718055994531; // ln 2
constexpr double kOracleEtaStar = 0.25;
constexpr double kOracleClipFixed = 2020.0;
constexpr double kOracleClipAveraged = 3180.0;
constexpr double kOracleGradEvalBound = 1600.0;
constexpr double kOracleGdLower = 15.927432588627218;     // M = e, natural log
constexpr double kOracleGdLowerQuoted = 15.93;
constexpr double kOracleGdUpper = 1200.0;                 // M = 2

struct Criterion {
    int index = 0;
    CriterionOutcome outcome;
    std::vector<AuditReport> audits;
    BoundReport bounds;
};

// Armijo-family traces produced by the suite, kept for the descent re-check.
struct ArmijoRunRecord {
    std::string label;
    RunTrace trace;
    double lambda = 0.5;
    bool eia = false;
};

Point ones(int dim) { return Point(static_cast<std::size_t>(dim), 1.0); }

std::string short_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

double rel_err(double x, double ref) {
    return std::abs(x - ref) / std::max(std::abs(ref), 1e-300);
}

OptimizerConfig armijo_config(double eps, int max_iter = 200000) {
    OptimizerConfig cfg;          // lambda = 1/2, f1 = f2 = 2, eta_init = 1
    cfg.linesearch.eps = eps;
    cfg.max_iter = max_iter;
    return cfg;
}

std::string pass_word(bool ok) { return ok ? "ok" : "FAIL"; }

// ---- criterion 1: iteration bound on cosh, dims 1 and 10, three eps ----
Criterion criterion_iteration_bound(std::vector<ArmijoRunRecord>& armijo_runs) {
    Criterion c;
    c.index = 1;
    c.outcome.name = "memory-armijo-iteration-bound-cosh";
    bool all = true;
    double max_seconds = 0.0;
    std::ostringstream detail;
    for (int dim : {1, 10}) {
        const Problem p = make_cosh_sum(dim);
        for (double eps : {1e-1, 1e-2, 1e-3}) {
            const auto t0 = std::chrono::steady_clock::now();
            RunTrace trace = run_memory_armijo(p, ones(dim), armijo_config(eps));
            const double seconds =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            max_seconds = std::max(max_seconds, seconds);

            BoundInputs b;
            b.L0 = 1.0;
            b.L1 = 1.0;
            b.delta = dim * (std::cosh(1.0) - 1.0);
            b.eps = eps;
            const BoundValue bound = memory_armijo_iteration_bound(b);

            const std::string tag = "cosh-d" + std::to_string(dim) + "-eps" + short_num(eps);
            AuditReport audit = audit_iteration_bound(trace, bound.value);
            audit.name += "[" + tag + "]";
            const bool ok = bound.applicable && audit.pass && seconds < 1.0;
            all = all && ok;

            BoundReportEntry entry;
            entry.name = "memory_armijo_iteration_bound[" + tag + "]";
            entry.bound = bound;
            entry.inputs = "L0=1 L1=1 delta=" + short_num(b.delta) + " eps=" + short_num(eps) +
                           " lambda=0.5 f1=2";
            entry.measured_iterations = trace.iterations();
            entry.measured_func_evals = trace.records.back().counters.func_evals;
            entry.measured_grad_evals = trace.records.back().counters.grad_evals;
            c.bounds.push_back(std::move(entry));
            c.audits.push_back(std::move(audit));
            armijo_runs.push_back({tag, std::move(trace), 0.5, false});
        }
    }
    detail << "6 runs within ceil(bound), max runtime " << short_num(max_seconds) << "s";
    c.outcome.pass = all;
    c.outcome.detail = detail.str();
    return c;
}

// ---- criterion 2: bound / asymptotic equivalent ratio near 1 ----
Criterion criterion_asymptotic_ratio() {
    Criterion c;
    c.index = 2;
    c.outcome.name = "asymptotic-equivalent-ratio";
    BoundInputs b;
    b.L0 = 1.0;
    b.L1 = 1.0;
    b.delta = 1.0;
    b.eps = 1e-4;
    const BoundValue exact = memory_armijo_iteration_bound(b);
    const BoundValue equiv = asymptotic_equiv(b);
    const double ratio = exact.value / equiv.value;
    c.outcome.pass = exact.applicable && equiv.applicable && ratio >= 0.99 && ratio <= 1.01;

    BoundReportEntry e1{"memory_armijo_iteration_bound[eps=1e-4]", exact,
                        "L0=1 L1=1 delta=1 eps=1e-4 lambda=0.5 f1=2", {}, {}, {}};
    BoundReportEntry e2{"asymptotic_equiv[eps=1e-4]", equiv,
                        "L0=1 delta=1 eps=1e-4 lambda=0.5 f1=2", {}, {}, {}};
    c.bounds.push_back(std::move(e1));
    c.bounds.push_back(std::move(e2));
    c.outcome.detail = "ratio=" + short_num(ratio) + " target [0.99, 1.01]";
    return c;
}

// ---- criterion 3: descent inequalities re-derived from every trace ----
Criterion criterion_descent_recheck(const std::vector<ArmijoRunRecord>& armijo_runs) {
    Criterion c;
    c.index = 3;
    c.outcome.name = "armijo-descent-recheck";
    bool all = true;
    long total_checks = 0;
    long total_violations = 0;
    for (const auto& run : armijo_runs) {
        AuditReport a = audit_armijo_recheck(run.trace, run.lambda, run.eia);
        a.name = std::string("audit_armijo_recheck") + (run.eia ? "[eia:" : "[") + run.label + "]";
        total_checks += a.samples;
        total_violations += a.violations;
        all = all && a.pass;
        c.audits.push_back(std::move(a));
    }
    c.outcome.pass = all && !armijo_runs.empty();
    c.outcome.detail = std::to_string(total_checks) + " inequalities over " +
                       std::to_string(armijo_runs.size()) + " runs, " +
                       std::to_string(total_violations) + " violations";
    return c;
}

// ---- criterion 4: EIA accepted steps never below eta* ----
Criterion criterion_step_floor(std::vector<ArmijoRunRecord>& armijo_runs) {
    Criterion c;
    c.index = 4;
    c.outcome.name = "eia-step-floor-quadratic";
    bool all = true;
    std::ostringstream detail;
    const std::vector<std::vector<double>> diags = {{1.0}, {4.0}, {1.0, 0.1}, {4.0, 0.4}};
    for (const auto& diag : diags) {
        const Problem p = make_quadratic(diag);
        RunTrace trace = run_eia(p, ones(p.dim()), armijo_config(1e-8));

        BoundInputs b;
        b.L = p.known().L;
        const BoundValue eta_star = eia_step_lower_bound(b);

        std::string tag = "quadratic-diag";
        for (double d : diag) tag += "-" + short_num(d);
        AuditReport audit = audit_step_floor(trace, eta_star.value);
        audit.name += "[" + tag + "]";
        const bool ok = eta_star.applicable && audit.pass &&
                        trace.terminated_by == Termination::GradBelowEps;
        all = all && ok;

        BoundReportEntry entry;
        entry.name = "eia_step_lower_bound[" + tag + "]";
        entry.bound = eta_star;
        entry.inputs = "L=" + short_num(*b.L) + " lambda=0.5 f1=2";
        entry.measured_iterations = trace.iterations();
        c.bounds.push_back(std::move(entry));
        c.audits.push_back(std::move(audit));
        armijo_runs.push_back({tag, std::move(trace), 0.5, true});
    }
    c.outcome.pass = all;
    c.outcome.detail = "4 runs (L in {1,4}), all accepted steps >= eta* - 1e-12";
    return c;
}

// ---- criterion 5: generalized-smoothness lemma audits on cosh dim 3 ----
Criterion criterion_smoothness_audits() {
    Criterion c;
    c.index = 5;
    c.outcome.name = "smoothness-lemma-audits-cosh3";
    constexpr std::uint64_t seed = 20240701;
    const Problem p = make_cosh_sum(3);
    const auto pairs = sample_point_pairs(3, 1000, -2.0, 2.0, seed);
    AuditReport growth = audit_gradient_growth(p, pairs, 1.0, 1.0);
    growth.seed = seed;
    AuditReport descent = audit_descent_inequality(p, pairs, 1.0, 1.0);
    descent.seed = seed;
    c.outcome.pass = growth.pass && descent.pass;
    c.outcome.detail = "gradient growth " + pass_word(growth.pass) + " (" +
                       std::to_string(growth.samples) + " checks), descent " +
                       pass_word(descent.pass) + " (" + std::to_string(descent.samples) + ")";
    c.audits.push_back(std::move(growth));
    c.audits.push_back(std::move(descent));
    return c;
}

// ---- criterion 6: h < 0 on (0, threshold] for seeded valid (a,b,c) ----
Criterion criterion_h_negativity() {
    Criterion c;
    c.index = 6;
    c.outcome.name = "h-function-negativity";
    constexpr std::uint64_t seed = 777;
    std::mt19937_64 rng(seed);
    auto draw = [&rng]() {
        // (0,3]: flip the half-open unit interval so zero is excluded
        return 3.0 * (1.0 - static_cast<double>(rng() >> 11) * 0x1.0p-53);
    };
    AuditReport audit;
    audit.name = "audit_h_negativity";
    audit.seed = seed;
    audit.worst_margin = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < 1000; ++i) {
        double a = 0.0, b = 0.0, cc = 0.0;
        do {
            a = draw();
            b = draw();
            cc = draw();
        } while (!(b > a * cc));
        const double threshold = h_threshold(a, b, cc).value;
        for (int j = 1; j <= 10; ++j) {
            const double x = threshold * j / 10.0;
            const double v = h_eval(a, b, cc, x);
            const double tol = 1e-12 * (a + b * x + a * std::exp(cc * x));
            ++audit.samples;
            audit.worst_margin = std::max(audit.worst_margin, v);
            if (v > tol) ++audit.violations;
        }
    }
    audit.pass = audit.violations == 0;
    audit.note = "h evaluated at 10 grid points per seeded triple, rounding slack 1e-12-scaled";
    c.outcome.pass = audit.pass;
    c.outcome.detail = std::to_string(audit.samples) + " evaluations, " +
                       std::to_string(audit.violations) + " violations, worst h=" +
                       short_num(audit.worst_margin);
    c.audits.push_back(std::move(audit));
    return c;
}

// ---- criterion 7: clipped GD averaged-gradient guarantee on cosh ----
Criterion criterion_clipped_average() {
    Criterion c;
    c.index = 7;
    c.outcome.name = "clipped-gd-averaged-bound-cosh";
    const Problem p = make_cosh_sum(1);
    const double target_eps = 0.05;

    BoundInputs b;
    b.L0 = 1.0;
    b.L1 = 1.0;
    b.delta = std::cosh(3.0) - 1.0;
    b.eps = target_eps;
    const BoundValue bound = clipping_bounds(b).averaged;

    const ClipSchedule schedule = clip_schedule_averaged(1.0, 1.0);
    OptimizerConfig cfg;
    cfg.clip_eta = schedule.eta;
    cfg.clip_gamma = schedule.gamma;
    cfg.max_iter = static_cast<int>(std::ceil(bound.value)) + 1;
    // The guarantee is about the running average, so the pointwise stop is
    // pushed far below it; the run still halts when sinh underflows eps.
    cfg.linesearch.eps = 1e-300;
    const RunTrace trace = run_clipped_gd(p, {3.0}, cfg);

    long first_n = -1;
    for (std::size_t i = 0; i < trace.avg_grad_norms.size(); ++i) {
        if (trace.avg_grad_norms[i] <= 2.0 * target_eps) {
            first_n = static_cast<long>(i) + 1;
            break;
        }
    }
    AuditReport audit;
    audit.name = "audit_clipped_avg_grad[cosh-d1-theta0=3]";
    audit.samples = trace.iterations();
    audit.pass = bound.applicable && first_n > 0 && static_cast<double>(first_n) <= bound.value;
    audit.violations = audit.pass ? 0 : 1;
    audit.worst_margin = first_n > 0 ? static_cast<double>(first_n) - bound.value
                                     : std::numeric_limits<double>::infinity();
    audit.note = "first n with avg |grad| <= 2 eps: " + std::to_string(first_n);
    c.outcome.pass = audit.pass;
    c.outcome.detail = "avg <= 0.1 first reached at n=" + std::to_string(first_n) +
                       ", bound=" + short_num(bound.value);

    BoundReportEntry entry;
    entry.name = "clipping_bounds.averaged[cosh-d1]";
    entry.bound = bound;
    entry.inputs = "L0=1 L1=1 delta=" + short_num(b.delta) + " eps=0.05 A=1.06";
    entry.measured_iterations = first_n;
    c.bounds.push_back(std::move(entry));
    c.audits.push_back(std::move(audit));
    return c;
}

// ---- criterion 8: EIA min-grad decay faster than 1/n on rosenbrock ----
Criterion criterion_o_small(std::vector<ArmijoRunRecord>& armijo_runs) {
    Criterion c;
    c.index = 8;
    c.outcome.name = "eia-min-grad-decay-rosenbrock";
    const Problem p = make_rosenbrock(2);
    RunTrace trace = run_eia(p, {-1.2, 1.0}, armijo_config(1e-10, 5000));
    AuditReport audit = audit_o_small_decay(trace);
    audit.name += "[rosenbrock-d2]";
    c.outcome.pass = audit.applicable && audit.pass;
    // The head window sits inside this run's valley transient (the running
    // min stalls until n ~ 230), so also report where n*g_min ends up: the
    // decay itself is visible even when the fixed windows reject it.
    double g_min = std::numeric_limits<double>::infinity();
    for (const auto& rec : trace.records) g_min = std::min(g_min, rec.grad_norm);
    const double end_product = g_min * static_cast<double>(trace.records.size());
    c.outcome.detail = std::to_string(trace.iterations()) + " iterations (" +
                       to_string(trace.terminated_by) + "); " + audit.note +
                       "; end n*g_min=" + short_num(end_product);
    c.audits.push_back(std::move(audit));
    armijo_runs.push_back({"rosenbrock-d2", std::move(trace), 0.5, true});
    return c;
}

// ---- criterion 9: finite-difference gradient check on the whole zoo ----
Criterion criterion_finite_diff() {
    Criterion c;
    c.index = 9;
    c.outcome.name = "finite-diff-gradients-all-problems";
    struct Item {
        Problem problem;
        std::uint64_t seed;
    };
    const Item items[] = {
        {make_quadratic({1.0, 4.0}), 101},
        {make_cosh_sum(3), 102},
        {make_nesterov_worst(5), 103},
        {make_double_well(), 104},
        {make_rosenbrock(2), 105},
    };
    bool all = true;
    for (const auto& item : items) {
        const auto points = sample_points(item.problem.dim(), 100, -2.0, 2.0, item.seed);
        AuditReport a = audit_finite_diff(item.problem, points);
        a.seed = item.seed;
        a.name += "[" + item.problem.name() + "]";
        all = all && a.pass;
        c.audits.push_back(std::move(a));
    }
    c.outcome.pass = all;
    c.outcome.detail = "5 problems x 100 seeded points, rel tol 1e-5";
    return c;
}

// ---- criterion 10: exact evaluation accounting on the unit quadratic ----
Criterion criterion_eval_accounting(std::vector<ArmijoRunRecord>& armijo_runs) {
    Criterion c;
    c.index = 10;
    c.outcome.name = "evaluation-accounting-quadratic";
    const Problem p = make_quadratic({1.0});

    auto check_run = [&](RunTrace trace, bool eia, const char* label) {
        AuditReport a;
        a.name = std::string("audit_eval_accounting[") + label + "]";
        const auto& counters = trace.records.back().counters;
        const bool ok = trace.terminated_by == Termination::GradBelowEps &&
                        trace.iterations() == 1 && trace.records.size() == 2 &&
                        trace.records.front().backtracks == 0 &&
                        counters.func_evals == 2 && counters.grad_evals == 2;
        a.samples = 1;
        a.violations = ok ? 0 : 1;
        a.pass = ok;
        a.worst_margin = ok ? 0.0 : 1.0;
        a.note = "func_evals=" + std::to_string(counters.func_evals) +
                 " grad_evals=" + std::to_string(counters.grad_evals) +
                 " backtracks=" + std::to_string(trace.records.front().backtracks) +
                 " (hand-derived: 2/2/0)";
        c.audits.push_back(a);
        armijo_runs.push_back({std::string(label) + "-accounting", std::move(trace), 0.5, eia});
        return ok;
    };

    const bool mem_ok = check_run(run_memory_armijo(p, {1.0}, armijo_config(1e-8)), false, "memory");
    const bool eia_ok = check_run(run_eia(p, {1.0}, armijo_config(1e-8)), true, "eia");
    c.outcome.pass = mem_ok && eia_ok;
    c.outcome.detail = "one iteration each; counters exactly 2 func / 2 grad (memory " +
                       pass_word(mem_ok) + ", eia " + pass_word(eia_ok) + ")";
    return c;
}

// ---- criterion 11: closed-form values against frozen oracles ----
Criterion criterion_bound_oracles() {
    Criterion c;
    c.index = 11;
    c.outcome.name = "bound-formula-oracles";

    BoundInputs unit;  // L0 = L1 = delta = 1, eps = 0.1, lambda = 1/2, f1 = f2 = 2
    unit.L0 = 1.0;
    unit.L1 = 1.0;
    unit.delta = 1.0;
    unit.eps = 0.1;

    BoundInputs with_L = unit;
    with_L.L = 1.0;
    BoundInputs with_Me = unit;
    with_Me.M = std::exp(1.0);
    BoundInputs with_M2 = unit;
    with_M2.M = 2.0;

    struct Check {
        std::string name;
        double computed;
        double oracle;
        double tol;
    };
    const double iter_bound = memory_armijo_iteration_bound(unit).value;
    const double gd_lower = gd_bounds(with_Me).lower.value;
    const std::vector<Check> checks = {
        {"memory_armijo_iteration_bound", iter_bound, kOracleIterBound, 1e-9},
        {"memory_armijo_iteration_bound(quoted)", iter_bound, kOracleIterBoundQuoted, 1e-3},
        {"asymptotic_equiv", asymptotic_equiv(unit).value, kOracleAsymptotic, 1e-9},
        {"admissible_step_tilde_eta", admissible_step_tilde_eta(1.0, unit).value, kOracleTildeEta,
         1e-9},
        {"h_threshold", h_threshold(1.0, 2.0, 1.0).value, kOracleHThreshold, 1e-9},
        {"eia_step_lower_bound", eia_step_lower_bound(with_L).value, kOracleEtaStar, 1e-9},
        {"clipping_bounds.fixed_threshold", clipping_bounds(unit).fixed_threshold.value,
         kOracleClipFixed, 1e-9},
        {"clipping_bounds.averaged", clipping_bounds(unit).averaged.value, kOracleClipAveraged,
         1e-9},
        {"memory_armijo_grad_eval_bound", memory_armijo_grad_eval_bound(unit).value,
         kOracleGradEvalBound, 1e-9},
        {"gd_bounds.lower", gd_lower, kOracleGdLower, 1e-9},
        {"gd_bounds.lower(quoted)", gd_lower, kOracleGdLowerQuoted, 1e-3},
        {"gd_bounds.upper", gd_bounds(with_M2).upper.value, kOracleGdUpper, 1e-9},
    };

    AuditReport audit;
    audit.name = "audit_bound_oracles";
    std::string failures;
    for (const auto& chk : checks) {
        ++audit.samples;
        const double err = rel_err(chk.computed, chk.oracle);
        audit.worst_margin = std::max(audit.worst_margin, err - chk.tol);
        if (err > chk.tol) {
            ++audit.violations;
            failures += " " + chk.name;
        }
        BoundReportEntry entry;
        entry.name = chk.name;
        entry.bound = BoundValue::ok(chk.computed, "oracle " + short_num(chk.oracle) + " tol " +
                                                       short_num(chk.tol));
        entry.inputs = "L0=1 L1=1 delta=1 eps=0.1 lambda=0.5 f1=f2=2 (M/L per formula)";
        c.bounds.push_back(std::move(entry));
    }
    audit.pass = audit.violations == 0;
    audit.note = failures.empty() ? "all formula values reproduce their oracles"
                                  : "failing:" + failures;
    c.outcome.pass = audit.pass;
    c.outcome.detail = std::to_string(audit.samples) + " oracle comparisons, " +
                       std::to_string(audit.violations) + " failures";
    c.audits.push_back(std::move(audit));
    return c;
}

bool criterion_selected(const Criterion& c, const std::vector<std::string>& only) {
    if (only.empty()) return true;
    auto hit = [](const std::string& hay, const std::string& needle) {
        return !needle.empty() && hay.find(needle) != std::string::npos;
    };
    for (const auto& token : only) {
        if (hit(c.outcome.name, token)) return true;
        for (const auto& a : c.audits)
            if (hit(a.name, token)) return true;
    }
    return false;
}

}  // namespace

SuiteReport run_verification_suite(const std::vector<std::string>& only) {
    std::vector<ArmijoRunRecord> armijo_runs;
    std::vector<Criterion> criteria;
    criteria.push_back(criterion_iteration_bound(armijo_runs));
    criteria.push_back(criterion_asymptotic_ratio());
    criteria.push_back(criterion_step_floor(armijo_runs));
    criteria.push_back(criterion_smoothness_audits());
    criteria.push_back(criterion_h_negativity());
    criteria.push_back(criterion_clipped_average());
    criteria.push_back(criterion_o_small(armijo_runs));
    criteria.push_back(criterion_finite_diff());
    criteria.push_back(criterion_eval_accounting(armijo_runs));
    criteria.push_back(criterion_bound_oracles());
    // Re-checks every Armijo-family trace gathered above, so it runs last.
    criteria.push_back(criterion_descent_recheck(armijo_runs));
    std::sort(criteria.begin(), criteria.end(),
              [](const Criterion& a, const Criterion& b) { return a.index < b.index; });

    SuiteReport report;
    report.all_pass = true;
    for (auto& c : criteria) {
        if (!criterion_selected(c, only)) continue;
        report.all_pass = report.all_pass && c.outcome.pass;
        report.criteria.push_back(std::move(c.outcome));
        for (auto& a : c.audits) report.audits.push_back(std::move(a));
        for (auto& e : c.bounds) report.bounds.push_back(std::move(e));
    }
    if (report.criteria.empty()) report.all_pass = false;
    return report;
}

}  // namespace armijo
