#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "armijo/core.hpp"

namespace armijo {

// Analytically known constants of a problem. Unset means "not tractable",
// not zero. L0/L1 are the generalized-smoothness constants in
// ||hess R|| <= L0 + L1 ||grad R||; L is a plain gradient Lipschitz constant.
struct KnownConstants {
    std::optional<double> L0;
    std::optional<double> L1;
    std::optional<double> L;
    std::optional<double> r_star;
    std::vector<double> critical_values;  // sorted; empty when unknown
};

// Immutable objective. Evaluations are never cached: every value() call
// costs one func_eval, every gradient() call one grad_eval, so evaluation
// counts stay comparable across optimizers.
class Problem {
public:
    using ValueFn = std::function<double(const Point&)>;
    using GradFn = std::function<Point(const Point&)>;

    Problem(std::string name, int dim, ValueFn value, GradFn grad, KnownConstants known);

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    const KnownConstants& known() const { return known_; }

    double value(const Point& x, EvalCounters& counters) const;
    Point gradient(const Point& x, EvalCounters& counters) const;

private:
    std::string name_;
    int dim_;
    ValueFn value_;
    GradFn grad_;
    KnownConstants known_;
};

// R = 1/2 sum d_i x_i^2. Exact L = max d_i (and L0 = max d_i, L1 = 0).
Problem make_quadratic(const std::vector<double>& diag);

// R = sum cosh(x_i); realizes ||hess|| <= L0 + L1 ||grad|| with L0 = L1 = 1:
// the Hessian is diag(cosh x_i) and max cosh x_i <= 1 + max|sinh x_i|.
Problem make_cosh_sum(int dim);

// R = x_1^2 + sum_{i<N} (x_i - x_{i+1})^2 + x_N^2, dim odd >= 3.
Problem make_nesterov_worst(int dim);

// Scalar R = (x^2 - 1)^2: minima at +-1 (value 0), local max at 0 (value 1).
Problem make_double_well();

// R = sum_{i<N} [100 (x_{i+1} - x_i^2)^2 + (1 - x_i)^2].
Problem make_rosenbrock(int dim);

// CLI-facing lookup: quadratic, cosh, nesterov, doublewell, rosenbrock.
// quadratic takes diag (or dim, meaning unit diag); the rest take dim.
Problem make_problem(const std::string& name, int dim, const std::vector<double>& diag = {});

}  // namespace armijo
