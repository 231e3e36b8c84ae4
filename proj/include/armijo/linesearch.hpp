#pragma once

#include <optional>

#include "armijo/core.hpp"
#include "armijo/problems.hpp"

namespace armijo {

struct LineSearchConfig {
    double lambda = 0.5;       // sufficient-decrease fraction, in (0,1)
    double f1 = 2.0;           // backtracking shrink factor, > 1
    double f2 = 2.0;           // memory inflation factor, > 1
    double eta_init = 1.0;
    double eps = 1e-6;         // stationarity threshold of the outer loop
    int max_backtracks = 200;  // guard against step underflow
    double eta_max = 1e12;     // cap for the memory update

    void validate() const;  // throws InvalidInput
};

struct LineSearchOutcome {
    double accepted_eta = 0.0;
    Point next_point;
    double next_value = 0.0;
    int backtracks = 0;
    double next_eta_memory = 0.0;    // min(f2 * accepted_eta, eta_max)
    std::optional<Point> next_grad;  // filled by eia_step only
};

// First eta in {eta_in, eta_in/f1, eta_in/f1^2, ...} passing
//   R(theta - eta g) - r0 <= -lambda * eta * |g|^2
// (accept on <=, reject strictly on >). One func_eval per trial; non-finite
// trial values count as rejections. r0 = R(theta) is passed in, never
// recomputed. nullopt after max_backtracks rejections (step underflow).
std::optional<LineSearchOutcome> memory_armijo_step(const Problem& problem, const Point& theta,
                                                    double r0, const Point& g, double eta_in,
                                                    const LineSearchConfig& cfg,
                                                    EvalCounters& counters);

// Same trial schedule, but acceptance needs the classical condition AND
//   R(trial) - r0 <= -lambda * eta * |g| * |grad R(trial)|.
// Each trial costs one func_eval and one grad_eval; the accepted trial's
// gradient is returned so the outer loop does not recompute it.
std::optional<LineSearchOutcome> eia_step(const Problem& problem, const Point& theta, double r0,
                                          const Point& g, double eta_in,
                                          const LineSearchConfig& cfg, EvalCounters& counters);

}  // namespace armijo
