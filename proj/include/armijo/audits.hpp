#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "armijo/core.hpp"
#include "armijo/problems.hpp"

namespace armijo {

// Outcome of one numerical inequality audit. pass iff the audit applied and
// no sample violated its inequality beyond the stated slack. worst_margin is
// the most positive LHS - RHS seen (negative when everything held strictly);
// seed is 0 when the samples were caller-provided.
struct AuditReport {
    std::string name;
    long samples = 0;
    long violations = 0;
    double worst_margin = -std::numeric_limits<double>::infinity();
    bool applicable = true;
    bool pass = false;
    std::uint64_t seed = 0;
    std::string note;
};

using PointPair = std::pair<Point, Point>;

// Deterministic sampling in [lo,hi]^dim. The doubles are derived from raw
// mt19937_64 output (53-bit mantissa scaling), not from distribution
// adapters, so streams are identical across standard libraries.
std::vector<Point> sample_points(int dim, int count, double lo, double hi, std::uint64_t seed);
std::vector<PointPair> sample_point_pairs(int dim, int count, double lo, double hi,
                                          std::uint64_t seed);

// Gradient-growth inequality along segments gamma(t) = y1 + t (y2 - y1):
//   |grad R(gamma(t)) - grad R(y1)|
//     <= -L0/L1 - |grad R(y1)| + (L0/L1 + |grad R(y1)|) e^{L1 |y2-y1| t}
// checked at t in {0.1, ..., 1.0}, slack 1e-9 (1 + |RHS|). Needs L1 > 0.
AuditReport audit_gradient_growth(const Problem& problem, const std::vector<PointPair>& pairs,
                                  double L0, double L1);

// Descent inequality between endpoints:
//   R(y2) - R(y1) <= grad R(y1) . (y2 - y1) - (L0 + L1 |grad R(y1)|) |y2-y1|
//                    - (L0 + L1 |grad R(y1)|)/L1^2 (1 - e^{L1 |y2-y1|})
// same slack as audit_gradient_growth.
AuditReport audit_descent_inequality(const Problem& problem, const std::vector<PointPair>& pairs,
                                     double L0, double L1);

// Central finite differences, step 1e-6 (1 + |x_i|) per coordinate, against
// the analytic gradient; relative tolerance 1e-5 with absolute floor 1e-8.
AuditReport audit_finite_diff(const Problem& problem, const std::vector<Point>& points);

// Finite-sample proxy for min-grad-norm decaying faster than 1/n: with
// g_n = min_{k<n} grad_norm, requires max n g_n over n in [150, end]
// strictly below max over n in [25, 75]. Traces shorter than 200 records
// are marked inapplicable.
AuditReport audit_o_small_decay(const RunTrace& trace);

// Counts accepted steps below eta_star - 1e-12.
AuditReport audit_step_floor(const RunTrace& trace, double eta_star);

// pass iff the trace reached GradBelowEps within ceil(bound) completed
// iterations; traces stopped by budget or underflow are inapplicable.
AuditReport audit_iteration_bound(const RunTrace& trace, double bound);

// Re-derives the accept inequalities from consecutive trace records with
// 1e-12 absolute slack: r[i+1] - r[i] <= -lambda eta_i |g_i|^2 and, for EIA
// traces, additionally <= -lambda eta_i |g_i| |g_{i+1}|.
AuditReport audit_armijo_recheck(const RunTrace& trace, double lambda, bool eia);

}  // namespace armijo
