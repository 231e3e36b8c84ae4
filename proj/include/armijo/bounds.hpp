#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "armijo/core.hpp"

namespace armijo {

// Constant of the averaged clipped-GD guarantee and its schedule.
inline constexpr double kClipAveragingConstant = 1.06;

// Inputs shared by the complexity formulas. Natural logarithm everywhere,
// including the "log M" of the GD lower bound (the choice changes values,
// not orders; reports state it).
struct BoundInputs {
    double L0 = 0.0;               // generalized-smoothness offset
    double L1 = 0.0;               // generalized-smoothness slope
    std::optional<double> L;       // plain gradient Lipschitz constant
    std::optional<double> M;       // sup of |grad| on the initial sublevel set
    double delta = 0.0;            // R(theta0) - inf R
    double eps = 1.0;              // target stationarity
    double lambda = 0.5;
    double f1 = 2.0;
    double f2 = 2.0;

    void validate() const;  // throws InvalidInput; lambda = 1 passes and is
                            // handled per-formula as a degenerate marker
};

// A formula evaluation that refuses to propagate silent NaNs: either a
// finite applicable value, or an explicit marker with the reason.
struct BoundValue {
    double value = std::numeric_limits<double>::quiet_NaN();
    bool applicable = false;
    std::string note;

    static BoundValue ok(double v, std::string n = {}) { return {v, true, std::move(n)}; }
    static BoundValue not_applicable(std::string reason,
                                     double v = std::numeric_limits<double>::quiet_NaN()) {
        return {v, false, std::move(reason)};
    }
};

// One line of the verification report: a formula value next to what a run
// actually measured.
struct BoundReportEntry {
    std::string name;
    BoundValue bound;
    std::string inputs;
    std::optional<long> measured_iterations;
    std::optional<std::uint64_t> measured_func_evals;
    std::optional<std::uint64_t> measured_grad_evals;
};
using BoundReport = std::vector<BoundReportEntry>;

// Iteration bound of the memory backtracking scheme under
// ||hess|| <= L0 + L1 ||grad||:
//   f1 L1 delta / (lambda eps ln((L0 + L1 (2-lambda) eps) / (L0 + L1 eps))).
// L1 = 0 is the classical regime and is marked inapplicable.
BoundValue memory_armijo_iteration_bound(const BoundInputs& b);

// Small-eps equivalent f1 L0 delta / (lambda (1-lambda) eps^2); equals
// 8 L0 delta / eps^2 at f1 = 2, lambda = 1/2.
BoundValue asymptotic_equiv(const BoundInputs& b);

// Step size tilde-eta = ln((L0 + L1 (2-lambda) g) / (L0 + L1 g)) / (L1 g),
// guaranteed to pass the classical Armijo test at gradient norm g; the
// backtracking therefore never accepts below tilde-eta / f1.
BoundValue admissible_step_tilde_eta(double g_norm, const BoundInputs& b);

// h(x) = -a - b x + a e^{c x}; negative on (0, threshold] with
// threshold = ln(b / (a c)) / c whenever b > a c.
double h_eval(double a, double b, double c, double x);
BoundValue h_threshold(double a, double b, double c);

// Floor for EIA accepted steps on an L-smooth problem:
// 2 (1-lambda) / (f1 (1 + 2 lambda) L).
BoundValue eia_step_lower_bound(const BoundInputs& b);

// Average trial evaluations per outer iteration.
double evals_per_iter_memory(double f1, double f2);     // (1/2)(1 + ln f2 / ln f1)
double eia_eval_factor(double f1, double f2);           // (3/2)(1 + ln f2 / ln f1) + 1

struct GdBounds {
    BoundValue lower;  // L1 M (delta - 5 eps / 8) / (8 eps^2 (ln M + 1)); needs L0,L1 >= 1, M > 1
    BoundValue upper;  // 4 (M L1 + L0) delta / eps^2 at constant step 1/(2 (M L1 + L0))
};
GdBounds gd_bounds(const BoundInputs& b);

struct ClippingBounds {
    BoundValue fixed_threshold;  // 20 L0 delta / eps^2 + 20 max(1, L1^2) delta / L0
    BoundValue averaged;         // 30 delta max(A L0 / eps^2, 25 A L1^2 / L0), A = 1.06
};
ClippingBounds clipping_bounds(const BoundInputs& b);

// Total gradient-evaluation estimate of the memory scheme, stated only for
// f1 = 2, lambda = 1/2: 4 (1 + ln f2 / ln 2) L0 delta / eps^2 + 8 L0 delta / eps^2.
BoundValue memory_armijo_grad_eval_bound(const BoundInputs& b);

// EIA complexity with caller-supplied diagnostic constants (the critical-value
// count s_tilde and a desingularizing value phi_at are proof-side objects, not
// derivable from a problem definition); d is fixed to 0.99:
//   (1/eps) [ (s_tilde+1) / (d lambda eta_star) * phi_at
//             + (s_tilde+1) sqrt(delta / lambda) eta_star^{-3/2} ].
double eia_complexity_bound_symbolic(double eta_star, double delta, double eps, double lambda,
                                     int s_tilde, double phi_at);

}  // namespace armijo
