#include "armijo/audits.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace armijo {

namespace {

// 53-bit uniform in [0,1) straight from the engine; avoids
// std::uniform_real_distribution, whose stream is implementation-defined.
double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * uniform01(rng);
}

Point sample_point(std::mt19937_64& rng, int dim, double lo, double hi) {
    Point p(static_cast<std::size_t>(dim));
    for (double& v : p) v = uniform(rng, lo, hi);
    return p;
}

// Tracks one <=-inequality check: LHS <= RHS within slack.
struct MarginTally {
    long samples = 0;
    long violations = 0;
    double worst = -std::numeric_limits<double>::infinity();

    void check(double lhs, double rhs, double slack) {
        ++samples;
        const double margin = lhs - rhs;
        worst = std::max(worst, margin);
        if (margin > slack) ++violations;
    }

    AuditReport into_report(std::string name, std::string note = {}) const {
        AuditReport r;
        r.name = std::move(name);
        r.samples = samples;
        r.violations = violations;
        r.worst_margin = worst;
        r.applicable = true;
        r.pass = violations == 0;
        r.note = std::move(note);
        return r;
    }
};

double scaled_slack(double rhs) { return 1e-9 * (1.0 + std::abs(rhs)); }

AuditReport inapplicable(std::string name, std::string reason) {
    AuditReport r;
    r.name = std::move(name);
    r.applicable = false;
    r.pass = false;
    r.note = std::move(reason);
    return r;
}

}  // namespace

std::vector<Point> sample_points(int dim, int count, double lo, double hi, std::uint64_t seed) {
    if (dim < 1 || count < 0 || !(lo < hi)) throw InvalidInput("sample_points: bad box");
    std::mt19937_64 rng(seed);
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(sample_point(rng, dim, lo, hi));
    return out;
}

std::vector<PointPair> sample_point_pairs(int dim, int count, double lo, double hi,
                                          std::uint64_t seed) {
    if (dim < 1 || count < 0 || !(lo < hi)) throw InvalidInput("sample_point_pairs: bad box");
    std::mt19937_64 rng(seed);
    std::vector<PointPair> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        Point a = sample_point(rng, dim, lo, hi);
        Point b = sample_point(rng, dim, lo, hi);
        out.emplace_back(std::move(a), std::move(b));
    }
    return out;
}

AuditReport audit_gradient_growth(const Problem& problem, const std::vector<PointPair>& pairs,
                                  double L0, double L1) {
    if (!(L1 > 0.0)) throw InvalidInput("gradient growth audit: L1 must be > 0");
    if (L0 < 0.0) throw InvalidInput("gradient growth audit: L0 must be >= 0");
    EvalCounters scratch;
    MarginTally tally;
    for (const auto& [y1, y2] : pairs) {
        const Point g1 = problem.gradient(y1, scratch);
        const double g1n = grad_norm(g1);
        Point diff(y1.size());
        for (std::size_t i = 0; i < y1.size(); ++i) diff[i] = y2[i] - y1[i];
        const double dist = grad_norm(diff);
        for (int ti = 1; ti <= 10; ++ti) {
            const double t = 0.1 * ti;
            Point gt(y1.size());
            for (std::size_t i = 0; i < y1.size(); ++i) gt[i] = y1[i] + t * diff[i];
            const Point g = problem.gradient(gt, scratch);
            Point gdiff(g.size());
            for (std::size_t i = 0; i < g.size(); ++i) gdiff[i] = g[i] - g1[i];
            const double lhs = grad_norm(gdiff);
            const double rhs =
                -L0 / L1 - g1n + (L0 / L1 + g1n) * std::exp(L1 * dist * t);
            tally.check(lhs, rhs, scaled_slack(rhs));
        }
    }
    return tally.into_report("audit_gradient_growth",
                             "segments x 10 interior points, slack 1e-9*(1+|rhs|)");
}

AuditReport audit_descent_inequality(const Problem& problem, const std::vector<PointPair>& pairs,
                                     double L0, double L1) {
    if (!(L1 > 0.0)) throw InvalidInput("descent audit: L1 must be > 0");
    if (L0 < 0.0) throw InvalidInput("descent audit: L0 must be >= 0");
    EvalCounters scratch;
    MarginTally tally;
    for (const auto& [y1, y2] : pairs) {
        const double r1 = problem.value(y1, scratch);
        const double r2 = problem.value(y2, scratch);
        const Point g1 = problem.gradient(y1, scratch);
        Point diff(y1.size());
        for (std::size_t i = 0; i < y1.size(); ++i) diff[i] = y2[i] - y1[i];
        const double dist = grad_norm(diff);
        const double coeff = L0 + L1 * grad_norm(g1);
        const double rhs = dot(g1, diff) - coeff * dist -
                           coeff / (L1 * L1) + coeff / (L1 * L1) * std::exp(L1 * dist);
        tally.check(r2 - r1, rhs, scaled_slack(rhs));
    }
    return tally.into_report("audit_descent_inequality", "slack 1e-9*(1+|rhs|)");
}

AuditReport audit_finite_diff(const Problem& problem, const std::vector<Point>& points) {
    EvalCounters scratch;
    MarginTally tally;
    for (const Point& x : points) {
        const Point g = problem.gradient(x, scratch);
        double point_worst = -std::numeric_limits<double>::infinity();
        bool bad = false;
        for (std::size_t i = 0; i < x.size(); ++i) {
            const double h = 1e-6 * (1.0 + std::abs(x[i]));
            Point xp = x;
            Point xm = x;
            xp[i] += h;
            xm[i] -= h;
            const double fd =
                (problem.value(xp, scratch) - problem.value(xm, scratch)) / (2.0 * h);
            const double err = std::abs(fd - g[i]);
            const double tol = std::max(1e-5 * std::max(std::abs(fd), std::abs(g[i])), 1e-8);
            point_worst = std::max(point_worst, err - tol);
            if (err > tol) bad = true;
        }
        ++tally.samples;
        tally.worst = std::max(tally.worst, point_worst);
        if (bad) ++tally.violations;
    }
    return tally.into_report("audit_finite_diff",
                             "central differences, rel tol 1e-5, abs floor 1e-8");
}

AuditReport audit_o_small_decay(const RunTrace& trace) {
    const long n_records = static_cast<long>(trace.records.size());
    if (n_records < 200)
        return inapplicable("audit_o_small_decay",
                            "needs >= 200 records; re-run with tighter eps");
    double running_min = std::numeric_limits<double>::infinity();
    double head_max = 0.0;  // n in [25, 75]
    double tail_max = 0.0;  // n in [150, end]
    for (long n = 1; n <= n_records; ++n) {
        running_min = std::min(running_min, trace.records[static_cast<std::size_t>(n - 1)].grad_norm);
        const double v = static_cast<double>(n) * running_min;
        if (n >= 25 && n <= 75) head_max = std::max(head_max, v);
        if (n >= 150) tail_max = std::max(tail_max, v);
    }
    AuditReport r;
    r.name = "audit_o_small_decay";
    r.samples = n_records;
    r.applicable = true;
    r.pass = tail_max < head_max;
    r.violations = r.pass ? 0 : 1;
    r.worst_margin = tail_max - head_max;
    r.note = "max n*g_n: head[25,75]=" + std::to_string(head_max) +
             " tail[150,end]=" + std::to_string(tail_max);
    return r;
}

AuditReport audit_step_floor(const RunTrace& trace, double eta_star) {
    if (!(eta_star > 0.0) || !std::isfinite(eta_star))
        throw InvalidInput("step floor audit: eta_star must be > 0");
    MarginTally tally;
    // Last record is the terminal state, not an accepted step.
    for (std::size_t i = 0; i + 1 < trace.records.size(); ++i) {
        tally.check(eta_star - 1e-12, trace.records[i].eta, 0.0);
    }
    return tally.into_report("audit_step_floor", "accepted eta >= eta_star - 1e-12");
}

AuditReport audit_iteration_bound(const RunTrace& trace, double bound) {
    if (!std::isfinite(bound) || bound < 0.0)
        throw InvalidInput("iteration bound audit: bound must be finite and >= 0");
    if (trace.terminated_by != Termination::GradBelowEps)
        return inapplicable("audit_iteration_bound",
                            "trace did not reach GradBelowEps (" +
                                to_string(trace.terminated_by) + ")");
    AuditReport r;
    r.name = "audit_iteration_bound";
    r.samples = 1;
    const double iters = static_cast<double>(trace.iterations());
    const double ceil_bound = std::ceil(bound);
    r.worst_margin = iters - ceil_bound;
    r.pass = iters <= ceil_bound;
    r.violations = r.pass ? 0 : 1;
    r.note = "iterations=" + std::to_string(trace.iterations()) +
             " ceil(bound)=" + std::to_string(static_cast<long long>(ceil_bound));
    return r;
}

AuditReport audit_armijo_recheck(const RunTrace& trace, double lambda, bool eia) {
    if (!(lambda > 0.0) || !(lambda < 1.0)) throw InvalidInput("recheck: lambda must lie in (0,1)");
    MarginTally tally;
    const double slack = 1e-12;
    for (std::size_t i = 0; i + 1 < trace.records.size(); ++i) {
        const auto& cur = trace.records[i];
        const auto& nxt = trace.records[i + 1];
        const double dr = nxt.r_value - cur.r_value;
        tally.check(dr, -lambda * cur.eta * cur.grad_norm * cur.grad_norm, slack);
        if (eia) tally.check(dr, -lambda * cur.eta * cur.grad_norm * nxt.grad_norm, slack);
    }
    return tally.into_report(eia ? "audit_armijo_recheck[eia]" : "audit_armijo_recheck",
                             "accept inequalities re-derived from trace, slack 1e-12");
}

}  // namespace armijo
