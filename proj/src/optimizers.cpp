#include "armijo/optimizers.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "armijo/bounds.hpp"

namespace armijo {

ClipSchedule clip_schedule_fixed_threshold(double L0, double L1) {
    if (!(L0 > 0.0)) throw InvalidInput("clip schedule: L0 must be > 0");
    if (L1 < 0.0) throw InvalidInput("clip schedule: L1 must be >= 0");
    const double eta = 1.0 / (10.0 * L0);
    double gamma = 1.0 / eta;
    if (L1 > 0.0) gamma = std::min(gamma, 1.0 / (10.0 * L1 * eta));
    return {eta, gamma};
}

ClipSchedule clip_schedule_averaged(double L0, double L1) {
    if (!(L0 > 0.0)) throw InvalidInput("clip schedule: L0 must be > 0");
    if (!(L1 > 0.0)) throw InvalidInput("averaged clip schedule: L1 must be > 0");
    const double a = kClipAveragingConstant;
    return {1.0 / (10.0 * a * L1), 1.0 / (10.0 * a * L0)};
}

namespace {

Point validated_start(const Problem& problem, const Point& theta0) {
    if (static_cast<int>(theta0.size()) != problem.dim())
        throw InvalidInput("theta0 dimension does not match the problem");
    if (!all_finite(theta0)) throw NonFiniteValue("theta0 has non-finite entries");
    return theta0;
}

RunTrace run_armijo_family(const Problem& problem, const Point& theta0, const OptimizerConfig& cfg,
                           bool eia) {
    cfg.linesearch.validate();
    if (cfg.max_iter < 1) throw InvalidInput("max_iter must be >= 1");

    RunTrace trace;
    EvalCounters counters;
    Point theta = validated_start(problem, theta0);

    Point g = problem.gradient(theta, counters);
    double gnorm = grad_norm(g);
    double eta_memory = cfg.linesearch.eta_init;
    std::optional<double> r_current;  // R(theta) when already evaluated this iterate

    int iter = 0;
    for (;;) {
        if (gnorm <= cfg.linesearch.eps) {
            trace.terminated_by = Termination::GradBelowEps;
            break;
        }
        if (iter >= cfg.max_iter) {
            trace.terminated_by = Termination::MaxIter;
            break;
        }

        // R0 is evaluated once per outer iteration; every trial inside the search reuses it.
        const double r0 = problem.value(theta, counters);
        if (!std::isfinite(r0)) throw NonFiniteValue("objective became non-finite");

        auto outcome = eia ? eia_step(problem, theta, r0, g, eta_memory, cfg.linesearch, counters)
                           : memory_armijo_step(problem, theta, r0, g, eta_memory, cfg.linesearch,
                                                counters);
        if (!outcome) {
            // Search exhausted; terminal record keeps the failed trial count.
            trace.records.push_back(
                {iter, r0, gnorm, eta_memory, cfg.linesearch.max_backtracks + 1, counters});
            trace.terminated_by = Termination::StepUnderflow;
            trace.final_point = std::move(theta);
            return trace;
        }

        IterationRecord rec{iter, r0, gnorm, outcome->accepted_eta, outcome->backtracks, {}};
        theta = std::move(outcome->next_point);
        r_current = outcome->next_value;
        eta_memory = outcome->next_eta_memory;
        if (eia) {
            g = std::move(*outcome->next_grad);  // accepted trial gradient, no recompute
        } else {
            g = problem.gradient(theta, counters);
        }
        gnorm = grad_norm(g);
        rec.counters = counters;
        trace.records.push_back(rec);
        ++iter;
    }

    // Terminal record: state at the final iterate; eta column = pending memory step.
    const double r_final = r_current ? *r_current : problem.value(theta, counters);
    trace.records.push_back({iter, r_final, gnorm, eta_memory, 0, counters});
    trace.final_point = std::move(theta);
    return trace;
}

RunTrace run_constant_family(const Problem& problem, const Point& theta0,
                             const OptimizerConfig& cfg, bool clipped) {
    if (!(cfg.linesearch.eps > 0.0)) throw InvalidInput("eps must be > 0");
    if (cfg.max_iter < 1) throw InvalidInput("max_iter must be >= 1");
    double eta = 0.0;
    double gamma = 0.0;
    if (clipped) {
        if (!cfg.clip_eta || !cfg.clip_gamma) throw InvalidInput("clipped GD requires clip_eta and clip_gamma");
        eta = *cfg.clip_eta;
        gamma = *cfg.clip_gamma;
        if (!(eta > 0.0) || !(gamma > 0.0)) throw InvalidInput("clip_eta and clip_gamma must be > 0");
    } else {
        if (!cfg.gd_eta) throw InvalidInput("GD requires gd_eta");
        eta = *cfg.gd_eta;
        if (!(eta > 0.0)) throw InvalidInput("gd_eta must be > 0");
    }

    RunTrace trace;
    EvalCounters counters;
    Point theta = validated_start(problem, theta0);

    Point g = problem.gradient(theta, counters);
    double gnorm = grad_norm(g);
    double r = problem.value(theta, counters);
    if (!std::isfinite(r)) throw NonFiniteValue("objective non-finite at theta0");
    double grad_norm_sum = 0.0;

    auto effective_step = [&](double gn) {
        return clipped && gn > 0.0 ? std::min(eta, gamma / gn) : eta;
    };

    int iter = 0;
    for (;;) {
        if (gnorm <= cfg.linesearch.eps) {
            trace.terminated_by = Termination::GradBelowEps;
            break;
        }
        if (iter >= cfg.max_iter) {
            trace.terminated_by = Termination::MaxIter;
            break;
        }

        IterationRecord rec{iter, r, gnorm, effective_step(gnorm), 0, {}};
        theta = step_point(theta, rec.eta, g);
        if (!all_finite(theta)) throw NonFiniteValue("iterate overflowed");
        g = problem.gradient(theta, counters);
        gnorm = grad_norm(g);
        r = problem.value(theta, counters);
        if (!std::isfinite(r)) throw NonFiniteValue("objective became non-finite");
        if (clipped) {
            grad_norm_sum += gnorm;
            trace.avg_grad_norms.push_back(grad_norm_sum / static_cast<double>(iter + 1));
        }
        rec.counters = counters;
        trace.records.push_back(rec);
        ++iter;
    }

    trace.records.push_back({iter, r, gnorm, effective_step(gnorm), 0, counters});
    trace.final_point = std::move(theta);
    return trace;
}

}  // namespace

RunTrace run_memory_armijo(const Problem& problem, const Point& theta0, const OptimizerConfig& cfg) {
    return run_armijo_family(problem, theta0, cfg, /*eia=*/false);
}

RunTrace run_eia(const Problem& problem, const Point& theta0, const OptimizerConfig& cfg) {
    return run_armijo_family(problem, theta0, cfg, /*eia=*/true);
}

RunTrace run_gd(const Problem& problem, const Point& theta0, const OptimizerConfig& cfg) {
    return run_constant_family(problem, theta0, cfg, /*clipped=*/false);
}

RunTrace run_clipped_gd(const Problem& problem, const Point& theta0, const OptimizerConfig& cfg) {
    return run_constant_family(problem, theta0, cfg, /*clipped=*/true);
}

}  // namespace armijo
