#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace armijo {

// Dense parameter vector; all entries are expected to stay finite.
using Point = std::vector<double>;

// A value, gradient or iterate stopped being representable.
struct NonFiniteValue : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad parameters for a problem factory.
struct InvalidProblem : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Bad argument to an operation (config, bound input, dimension mismatch).
struct InvalidInput : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Cumulative evaluation counts, owned by a single run. Never reset mid-run.
struct EvalCounters {
    std::uint64_t func_evals = 0;
    std::uint64_t grad_evals = 0;

    bool operator==(const EvalCounters&) const = default;
};

enum class Termination { GradBelowEps, MaxIter, StepUnderflow };

std::string to_string(Termination t);

// Snapshot of one outer iteration: state at theta_n plus the step taken
// from it. The last record of a trace describes the terminal state; its
// eta column holds the pending memory step (or the constant step), not an
// accepted one.
struct IterationRecord {
    int iter = 0;
    double r_value = 0.0;
    double grad_norm = 0.0;
    double eta = 0.0;
    int backtracks = 0;
    EvalCounters counters;
};

struct RunTrace {
    std::vector<IterationRecord> records;
    Termination terminated_by = Termination::MaxIter;
    Point final_point;

    // Clipped GD only: entry n-1 holds (1/n) * sum_{k=1..n} |grad(theta_k)|,
    // the quantity its averaged complexity guarantee is stated in.
    std::vector<double> avg_grad_norms;

    // Completed steps; the terminal record is not a step.
    int iterations() const {
        return records.empty() ? 0 : static_cast<int>(records.size()) - 1;
    }
};

bool all_finite(const Point& p);

double dot(const Point& a, const Point& b);

// Euclidean norm. Rejects non-finite input.
double grad_norm(const Point& p);

// theta - eta * g
Point step_point(const Point& theta, double eta, const Point& g);

}  // namespace armijo
