#pragma once

#include <optional>

#include "armijo/core.hpp"
#include "armijo/linesearch.hpp"
#include "armijo/problems.hpp"

namespace armijo {

struct OptimizerConfig {
    LineSearchConfig linesearch;      // Armijo family; eps is read by all optimizers
    std::optional<double> gd_eta;     // constant-step GD
    std::optional<double> clip_eta;   // clipped GD
    std::optional<double> clip_gamma; // clipped GD
    int max_iter = 100000;
};

struct ClipSchedule {
    double eta = 0.0;
    double gamma = 0.0;
};

// eta = 1/(10 L0), gamma = min(1/eta, 1/(10 L1 eta)): the schedule whose
// guarantee bounds the first iterate with |grad| <= eps.
ClipSchedule clip_schedule_fixed_threshold(double L0, double L1);

// eta = 1/(10 A L1), gamma = 1/(10 A L0), A = 1.06: the schedule whose
// guarantee bounds the running average of |grad| by 2 eps.
ClipSchedule clip_schedule_averaged(double L0, double L1);

// Outer loops. All four stop on |grad| <= eps (GradBelowEps) or after
// max_iter completed steps (MaxIter); the Armijo family additionally stops
// when a line search exhausts max_backtracks (StepUnderflow). A trace holds
// one record per visited iterate: k steps produce k+1 records, and the last
// record's eta column carries the pending memory step (or the constant
// step), not an accepted one.
RunTrace run_memory_armijo(const Problem& problem, const Point& theta0, const OptimizerConfig& cfg);
RunTrace run_eia(const Problem& problem, const Point& theta0, const OptimizerConfig& cfg);
RunTrace run_gd(const Problem& problem, const Point& theta0, const OptimizerConfig& cfg);

// theta' = theta - min(clip_eta, clip_gamma/|g|) * g. Divergence is data,
// not an error, unless an iterate stops being finite.
RunTrace run_clipped_gd(const Problem& problem, const Point& theta0, const OptimizerConfig& cfg);

}  // namespace armijo
