#include "armijo/linesearch.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace armijo {

void LineSearchConfig::validate() const {
    if (!(lambda > 0.0) || !(lambda < 1.0)) throw InvalidInput("lambda must lie in (0,1)");
    if (!(f1 > 1.0)) throw InvalidInput("f1 must be > 1");
    if (!(f2 > 1.0)) throw InvalidInput("f2 must be > 1");
    if (!(eta_init > 0.0)) throw InvalidInput("eta_init must be > 0");
    if (!(eta_max > 0.0)) throw InvalidInput("eta_max must be > 0");
    if (eta_init > eta_max) throw InvalidInput("eta_init must not exceed eta_max");
    if (!(eps > 0.0)) throw InvalidInput("eps must be > 0");
    if (max_backtracks <= 0) throw InvalidInput("max_backtracks must be > 0");
}

namespace {

void check_search_preconditions(double r0, double g_dot_g, double eta_in) {
    if (!std::isfinite(r0)) throw InvalidInput("line search: r0 must be finite");
    if (!(g_dot_g > 0.0)) throw InvalidInput("line search: gradient must be nonzero");
    if (!(eta_in > 0.0) || !std::isfinite(eta_in)) throw InvalidInput("line search: eta_in must be > 0");
}

double memory_update(double eta, const LineSearchConfig& cfg) {
    return std::min(cfg.f2 * eta, cfg.eta_max);
}

}  // namespace

std::optional<LineSearchOutcome> memory_armijo_step(const Problem& problem, const Point& theta,
                                                    double r0, const Point& g, double eta_in,
                                                    const LineSearchConfig& cfg,
                                                    EvalCounters& counters) {
    const double vdot = dot(g, g);
    check_search_preconditions(r0, vdot, eta_in);

    double eta = eta_in;
    for (int k = 0; k <= cfg.max_backtracks; ++k) {
        Point trial = step_point(theta, eta, g);
        const double r = problem.value(trial, counters);
        if (std::isfinite(r) && r - r0 <= -cfg.lambda * eta * vdot) {
            return LineSearchOutcome{eta, std::move(trial), r, k, memory_update(eta, cfg), std::nullopt};
        }
        eta /= cfg.f1;
    }
    return std::nullopt;
}

std::optional<LineSearchOutcome> eia_step(const Problem& problem, const Point& theta, double r0,
                                          const Point& g, double eta_in,
                                          const LineSearchConfig& cfg, EvalCounters& counters) {
    const double vdot = dot(g, g);
    check_search_preconditions(r0, vdot, eta_in);
    const double gnorm = std::sqrt(vdot);

    double eta = eta_in;
    for (int k = 0; k <= cfg.max_backtracks; ++k) {
        Point trial = step_point(theta, eta, g);
        const double r = problem.value(trial, counters);
        Point trial_grad = problem.gradient(trial, counters);
        if (std::isfinite(r) && all_finite(trial_grad)) {
            const double dr = r - r0;
            const bool classical = dr <= -cfg.lambda * eta * vdot;
            const bool semi_implicit = dr <= -cfg.lambda * eta * gnorm * grad_norm(trial_grad);
            if (classical && semi_implicit) {
                return LineSearchOutcome{eta, std::move(trial), r, k, memory_update(eta, cfg),
                                         std::move(trial_grad)};
            }
        }
        eta /= cfg.f1;
    }
    return std::nullopt;
}

}  // namespace armijo
