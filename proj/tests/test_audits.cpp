#include <cmath>

#include "doctest.h"

#include "armijo/audits.hpp"
#include "armijo/bounds.hpp"
#include "armijo/optimizers.hpp"

using namespace armijo;

namespace {

RunTrace synthetic_trace(int n_records, double (*gn)(int)) {
    RunTrace t;
    t.terminated_by = Termination::GradBelowEps;
    for (int n = 1; n <= n_records; ++n) {
        IterationRecord rec{};
        rec.iter = n - 1;
        rec.grad_norm = gn(n);
        t.records.push_back(rec);
    }
    return t;
}

RunTrace trace_with_etas(std::initializer_list<double> etas) {
    RunTrace t;
    t.terminated_by = Termination::GradBelowEps;
    int i = 0;
    for (double e : etas) {
        IterationRecord rec{};
        rec.iter = i++;
        rec.eta = e;
        t.records.push_back(rec);
    }
    return t;
}

}  // namespace

TEST_CASE("samplers are deterministic and stay inside the box") {
    const auto a = sample_points(3, 5, -2.0, 2.0, 99);
    const auto b = sample_points(3, 5, -2.0, 2.0, 99);
    REQUIRE_EQ(a.size(), 5);
    CHECK(a == b);
    for (const Point& p : a) {
        REQUIRE_EQ(p.size(), 3);
        for (double v : p) {
            CHECK_GE(v, -2.0);
            CHECK_LT(v, 2.0);
        }
    }
    CHECK_NE(a, sample_points(3, 5, -2.0, 2.0, 100));

    const auto pairs = sample_point_pairs(2, 4, 0.0, 1.0, 7);
    CHECK(pairs == sample_point_pairs(2, 4, 0.0, 1.0, 7));
    CHECK_NE(pairs[0].first, pairs[0].second);

    CHECK_THROWS_AS((void)sample_points(0, 5, -1.0, 1.0, 1), InvalidInput);
    CHECK_THROWS_AS((void)sample_points(1, 5, 1.0, 1.0, 1), InvalidInput);
}

TEST_CASE("gradient growth holds on a hand-checked cosh segment") {
    const Problem p = make_cosh_sum(1);
    // y1 = 0: |sinh t| must stay below e^t - 1, which is strict for t > 0
    const AuditReport r = audit_gradient_growth(p, {{{0.0}, {1.0}}}, 1.0, 1.0);
    CHECK(r.pass);
    CHECK_EQ(r.samples, 10);
    CHECK_EQ(r.violations, 0);
    CHECK_LT(r.worst_margin, 0.0);
}

TEST_CASE("gradient growth holds across sampled cosh segments") {
    const Problem p = make_cosh_sum(2);
    const auto pairs = sample_point_pairs(2, 200, -3.0, 3.0, 42);
    const AuditReport r = audit_gradient_growth(p, pairs, 1.0, 1.0);
    CHECK(r.pass);
    CHECK_EQ(r.samples, 2000);
    CHECK_EQ(r.violations, 0);
    CHECK_THROWS_AS((void)audit_gradient_growth(p, pairs, 1.0, 0.0), InvalidInput);
}

TEST_CASE("descent inequality holds on a hand-checked cosh segment") {
    const Problem p = make_cosh_sum(1);
    // 0 -> 1: lhs cosh(1) - 1, rhs e - 2 at L0 = L1 = 1
    const AuditReport r = audit_descent_inequality(p, {{{0.0}, {1.0}}}, 1.0, 1.0);
    CHECK(r.pass);
    CHECK_EQ(r.samples, 1);
    CHECK_EQ(r.worst_margin,
             doctest::Approx((std::cosh(1.0) - 1.0) - (std::exp(1.0) - 2.0)).epsilon(1e-12));
}

TEST_CASE("descent inequality holds across sampled cosh segments") {
    const Problem p = make_cosh_sum(3);
    const auto pairs = sample_point_pairs(3, 200, -2.5, 2.5, 314159);
    const AuditReport r = audit_descent_inequality(p, pairs, 1.0, 1.0);
    CHECK(r.pass);
    CHECK_EQ(r.violations, 0);
}

TEST_CASE("finite differences confirm the analytic gradients") {
    const Problem quad = make_quadratic({2.0, 0.5});
    CHECK(audit_finite_diff(quad, sample_points(2, 50, -4.0, 4.0, 11)).pass);
    const Problem rosen = make_rosenbrock(2);
    const AuditReport r = audit_finite_diff(rosen, {{-1.2, 1.0}, {0.3, 0.3}});
    CHECK(r.pass);
    CHECK_EQ(r.samples, 2);
}

TEST_CASE("finite differences expose a wrong gradient") {
    const Problem bad(
        "bad_cosh", 1, [](const Point& x) { return std::cosh(x[0]); },
        [](const Point& x) { return Point{2.0 * std::sinh(x[0])}; },  // factor 2 bug
        KnownConstants{});
    const AuditReport r = audit_finite_diff(bad, {{1.0}});
    CHECK_FALSE(r.pass);
    CHECK_EQ(r.violations, 1);
    CHECK_GT(r.worst_margin, 1.0);  // error is about sinh(1)
}

TEST_CASE("decay proxy separates 1/n from 1/n^2 gradient trails") {
    const RunTrace slow = synthetic_trace(300, [](int n) { return 1.0 / n; });
    const AuditReport rs = audit_o_small_decay(slow);
    CHECK(rs.applicable);
    CHECK_FALSE(rs.pass);  // n * g_n is constant, not shrinking

    const RunTrace fast =
        synthetic_trace(300, [](int n) { return 1.0 / (static_cast<double>(n) * n); });
    const AuditReport rf = audit_o_small_decay(fast);
    CHECK(rf.applicable);
    CHECK(rf.pass);

    const RunTrace tiny = synthetic_trace(100, [](int n) { return 1.0 / n; });
    const AuditReport rt = audit_o_small_decay(tiny);
    CHECK_FALSE(rt.applicable);
    CHECK_FALSE(rt.pass);
}

TEST_CASE("step floor audit skips the terminal record") {
    const AuditReport bad = audit_step_floor(trace_with_etas({0.3, 0.1, 0.9}), 0.25);
    CHECK_EQ(bad.samples, 2);
    CHECK_EQ(bad.violations, 1);
    CHECK_FALSE(bad.pass);

    // terminal eta is bookkeeping, not an accepted step
    const AuditReport ok = audit_step_floor(trace_with_etas({0.3, 0.26, 1e-6}), 0.25);
    CHECK_EQ(ok.samples, 2);
    CHECK(ok.pass);

    CHECK_THROWS_AS((void)audit_step_floor(trace_with_etas({0.3}), 0.0), InvalidInput);
}

TEST_CASE("iteration bound audit compares a finished run against a formula") {
    const Problem p = make_cosh_sum(1);
    OptimizerConfig cfg;
    cfg.linesearch.eps = 1e-2;
    const RunTrace t = run_memory_armijo(p, {1.0}, cfg);
    REQUIRE_EQ(t.terminated_by, Termination::GradBelowEps);

    BoundInputs b;
    b.L0 = 1.0;
    b.L1 = 1.0;
    b.delta = std::cosh(1.0) - 1.0;
    b.eps = 1e-2;
    const BoundValue bound = memory_armijo_iteration_bound(b);
    REQUIRE(bound.applicable);
    CHECK(audit_iteration_bound(t, bound.value).pass);
    CHECK_FALSE(audit_iteration_bound(t, 0.0).pass);

    OptimizerConfig capped;
    capped.linesearch.eps = 1e-12;
    capped.max_iter = 3;
    const RunTrace stopped = run_memory_armijo(p, {1.0}, capped);
    const AuditReport na = audit_iteration_bound(stopped, bound.value);
    CHECK_FALSE(na.applicable);
    CHECK_FALSE(na.pass);

    CHECK_THROWS_AS((void)audit_iteration_bound(t, -1.0), InvalidInput);
}

TEST_CASE("accept inequalities can be re-derived from a trace") {
    const Problem p = make_cosh_sum(2);
    OptimizerConfig cfg;
    cfg.linesearch.eps = 1e-6;
    const RunTrace mem = run_memory_armijo(p, {1.0, -0.5}, cfg);
    CHECK(audit_armijo_recheck(mem, 0.5, false).pass);

    RunTrace corrupted = mem;
    corrupted.records[1].r_value += 1.0;
    CHECK_FALSE(audit_armijo_recheck(corrupted, 0.5, false).pass);

    const RunTrace eia = run_eia(p, {1.0, -0.5}, cfg);
    const AuditReport r = audit_armijo_recheck(eia, 0.5, true);
    CHECK(r.pass);
    CHECK_EQ(r.samples, 2 * static_cast<long>(eia.records.size() - 1));

    CHECK_THROWS_AS((void)audit_armijo_recheck(mem, 1.0, false), InvalidInput);
}
