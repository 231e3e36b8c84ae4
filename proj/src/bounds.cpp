#include "armijo/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace armijo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* msg) {
    if (!ok) throw InvalidInput(msg);
}

}  // namespace

void BoundInputs::validate() const {
    require(std::isfinite(L0) && L0 >= 0.0, "bounds: L0 must be >= 0");
    require(std::isfinite(L1) && L1 >= 0.0, "bounds: L1 must be >= 0");
    if (L) require(std::isfinite(*L) && *L > 0.0, "bounds: L must be > 0 when set");
    if (M) require(std::isfinite(*M) && *M > 0.0, "bounds: M must be > 0 when set");
    require(std::isfinite(delta) && delta >= 0.0, "bounds: delta must be >= 0");
    require(std::isfinite(eps) && eps > 0.0, "bounds: eps must be > 0");
    require(std::isfinite(lambda) && lambda > 0.0 && lambda <= 1.0,
            "bounds: lambda must lie in (0,1]");
    require(std::isfinite(f1) && f1 > 1.0, "bounds: f1 must be > 1");
    require(std::isfinite(f2) && f2 > 1.0, "bounds: f2 must be > 1");
}

BoundValue memory_armijo_iteration_bound(const BoundInputs& b) {
    b.validate();
    if (b.L1 == 0.0)
        return BoundValue::not_applicable(
            "L1 = 0: classical smoothness; use f1*L*delta/(lambda*(1-lambda)*eps^2)");
    const double log_arg = (b.L0 + b.L1 * (2.0 - b.lambda) * b.eps) / (b.L0 + b.L1 * b.eps);
    const double den = b.lambda * b.eps * std::log(log_arg);
    if (!(den > 0.0))
        return BoundValue::not_applicable("degenerate: log factor vanishes as lambda -> 1", kInf);
    return BoundValue::ok(b.f1 * b.L1 * b.delta / den);
}

BoundValue asymptotic_equiv(const BoundInputs& b) {
    b.validate();
    if (b.L0 == 0.0) return BoundValue::not_applicable("L0 = 0");
    const double den = b.lambda * (1.0 - b.lambda) * b.eps * b.eps;
    if (!(den > 0.0))
        return BoundValue::not_applicable("degenerate: lambda (1-lambda) vanishes", kInf);
    return BoundValue::ok(b.f1 * b.L0 * b.delta / den);
}

BoundValue admissible_step_tilde_eta(double g_norm, const BoundInputs& b) {
    b.validate();
    if (!(g_norm > 0.0) || !std::isfinite(g_norm))
        throw InvalidInput("admissible step: gradient norm must be > 0");
    if (b.L1 == 0.0) return BoundValue::not_applicable("L1 = 0: step (1-lambda)/L0 has no log form");
    const double log_arg =
        (b.L0 + b.L1 * (2.0 - b.lambda) * g_norm) / (b.L0 + b.L1 * g_norm);
    return BoundValue::ok(std::log(log_arg) / (b.L1 * g_norm));
}

double h_eval(double a, double b, double c, double x) {
    require(std::isfinite(a) && a > 0.0, "h: a must be > 0");
    require(std::isfinite(b) && b > 0.0, "h: b must be > 0");
    require(std::isfinite(c) && c > 0.0, "h: c must be > 0");
    require(std::isfinite(x), "h: x must be finite");
    return -a - b * x + a * std::exp(c * x);
}

BoundValue h_threshold(double a, double b, double c) {
    require(std::isfinite(a) && a > 0.0, "h: a must be > 0");
    require(std::isfinite(b) && b > 0.0, "h: b must be > 0");
    require(std::isfinite(c) && c > 0.0, "h: c must be > 0");
    if (!(b > a * c)) return BoundValue::not_applicable("needs b > a*c");
    return BoundValue::ok(std::log(b / (a * c)) / c);
}

BoundValue eia_step_lower_bound(const BoundInputs& b) {
    b.validate();
    if (!b.L) return BoundValue::not_applicable("L not provided");
    return BoundValue::ok(2.0 * (1.0 - b.lambda) / (b.f1 * (1.0 + 2.0 * b.lambda) * *b.L));
}

double evals_per_iter_memory(double f1, double f2) {
    require(std::isfinite(f1) && f1 > 1.0, "eval factor: f1 must be > 1");
    require(std::isfinite(f2) && f2 > 1.0, "eval factor: f2 must be > 1");
    return 0.5 * (1.0 + std::log(f2) / std::log(f1));
}

double eia_eval_factor(double f1, double f2) {
    require(std::isfinite(f1) && f1 > 1.0, "eval factor: f1 must be > 1");
    require(std::isfinite(f2) && f2 > 1.0, "eval factor: f2 must be > 1");
    return 1.5 * (1.0 + std::log(f2) / std::log(f1)) + 1.0;
}

GdBounds gd_bounds(const BoundInputs& b) {
    b.validate();
    if (!b.M) {
        auto na = BoundValue::not_applicable("M not provided");
        return {na, na};
    }
    const double M = *b.M;
    GdBounds out;
    out.upper = BoundValue::ok(4.0 * (M * b.L1 + b.L0) * b.delta / (b.eps * b.eps),
                               "constant step 1/(2(M L1 + L0))");
    if (!(b.L0 >= 1.0) || !(b.L1 >= 1.0) || !(M > 1.0)) {
        out.lower = BoundValue::not_applicable("lower bound needs L0 >= 1, L1 >= 1, M > 1");
        return out;
    }
    const double num = b.L1 * M * (b.delta - 5.0 * b.eps / 8.0);
    const double den = 8.0 * b.eps * b.eps * (std::log(M) + 1.0);  // natural log
    const double v = num / den;
    out.lower = v >= 0.0 ? BoundValue::ok(v, "natural log convention")
                         : BoundValue::ok(0.0, "vacuous: delta < 5 eps / 8");
    return out;
}

ClippingBounds clipping_bounds(const BoundInputs& b) {
    b.validate();
    if (b.L0 == 0.0) {
        auto na = BoundValue::not_applicable("L0 = 0");
        return {na, na};
    }
    const double e2 = b.eps * b.eps;
    const double fixed = 20.0 * b.L0 * b.delta / e2 + 20.0 * std::max(1.0, b.L1 * b.L1) * b.delta / b.L0;
    const double a = kClipAveragingConstant;
    const double averaged =
        30.0 * b.delta * std::max(a * b.L0 / e2, 25.0 * a * b.L1 * b.L1 / b.L0);
    return {BoundValue::ok(fixed), BoundValue::ok(averaged)};
}

BoundValue memory_armijo_grad_eval_bound(const BoundInputs& b) {
    b.validate();
    if (b.f1 != 2.0 || b.lambda != 0.5)
        return BoundValue::not_applicable("stated only for f1 = 2, lambda = 1/2");
    if (b.L0 == 0.0) return BoundValue::not_applicable("L0 = 0");
    const double base = b.L0 * b.delta / (b.eps * b.eps);
    return BoundValue::ok(4.0 * (1.0 + std::log(b.f2) / std::log(2.0)) * base + 8.0 * base);
}

double eia_complexity_bound_symbolic(double eta_star, double delta, double eps, double lambda,
                                     int s_tilde, double phi_at) {
    require(std::isfinite(eta_star) && eta_star > 0.0, "eia bound: eta_star must be > 0");
    require(std::isfinite(delta) && delta >= 0.0, "eia bound: delta must be >= 0");
    require(std::isfinite(eps) && eps > 0.0, "eia bound: eps must be > 0");
    require(std::isfinite(lambda) && lambda > 0.0 && lambda < 1.0,
            "eia bound: lambda must lie in (0,1)");
    require(s_tilde >= 0, "eia bound: s_tilde must be >= 0");
    require(std::isfinite(phi_at) && phi_at >= 0.0, "eia bound: phi value must be >= 0");
    const double d = 0.99;
    const double s1 = static_cast<double>(s_tilde) + 1.0;
    return (s1 / (d * lambda * eta_star) * phi_at +
            s1 * std::sqrt(delta / lambda) * std::pow(eta_star, -1.5)) /
           eps;
}

}  // namespace armijo
