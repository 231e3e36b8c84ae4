#include "armijo/problems.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace armijo {

Problem::Problem(std::string name, int dim, ValueFn value, GradFn grad, KnownConstants known)
    : name_(std::move(name)),
      dim_(dim),
      value_(std::move(value)),
      grad_(std::move(grad)),
      known_(std::move(known)) {
    if (dim_ < 1) throw InvalidProblem("problem dimension must be >= 1");
}

double Problem::value(const Point& x, EvalCounters& counters) const {
    if (static_cast<int>(x.size()) != dim_) throw InvalidInput("value: dimension mismatch");
    ++counters.func_evals;
    return value_(x);
}

Point Problem::gradient(const Point& x, EvalCounters& counters) const {
    if (static_cast<int>(x.size()) != dim_) throw InvalidInput("gradient: dimension mismatch");
    ++counters.grad_evals;
    return grad_(x);
}

Problem make_quadratic(const std::vector<double>& diag) {
    if (diag.empty()) throw InvalidProblem("quadratic: empty diagonal");
    for (double d : diag) {
        if (!(d > 0.0) || !std::isfinite(d)) throw InvalidProblem("quadratic: diagonal entries must be positive");
    }
    const double L = *std::max_element(diag.begin(), diag.end());
    KnownConstants known;
    known.L0 = L;   // classical smoothness: L1 = 0 recovers the plain Lipschitz case
    known.L1 = 0.0;
    known.L = L;
    known.r_star = 0.0;
    auto value = [diag](const Point& x) {
        double s = 0.0;
        for (std::size_t i = 0; i < diag.size(); ++i) s += 0.5 * diag[i] * x[i] * x[i];
        return s;
    };
    auto grad = [diag](const Point& x) {
        Point g(diag.size());
        for (std::size_t i = 0; i < diag.size(); ++i) g[i] = diag[i] * x[i];
        return g;
    };
    return Problem("quadratic", static_cast<int>(diag.size()), value, grad, known);
}

Problem make_cosh_sum(int dim) {
    if (dim < 1) throw InvalidProblem("cosh: dim must be >= 1");
    KnownConstants known;
    known.L0 = 1.0;
    known.L1 = 1.0;
    known.r_star = static_cast<double>(dim);
    auto value = [](const Point& x) {
        double s = 0.0;
        for (double v : x) s += std::cosh(v);
        return s;
    };
    auto grad = [](const Point& x) {
        Point g(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) g[i] = std::sinh(x[i]);
        return g;
    };
    return Problem("cosh", dim, value, grad, known);
}

Problem make_nesterov_worst(int dim) {
    if (dim < 3 || dim % 2 == 0) throw InvalidProblem("nesterov: dim must be odd and >= 3");
    KnownConstants known;
    known.r_star = 0.0;
    auto value = [](const Point& x) {
        const std::size_t n = x.size();
        double s = x[0] * x[0] + x[n - 1] * x[n - 1];
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double d = x[i] - x[i + 1];
            s += d * d;
        }
        return s;
    };
    auto grad = [](const Point& x) {
        const std::size_t n = x.size();
        Point g(n, 0.0);
        g[0] += 2.0 * x[0];
        g[n - 1] += 2.0 * x[n - 1];
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double d = x[i] - x[i + 1];
            g[i] += 2.0 * d;
            g[i + 1] -= 2.0 * d;
        }
        return g;
    };
    return Problem("nesterov", dim, value, grad, known);
}

Problem make_double_well() {
    KnownConstants known;
    known.r_star = 0.0;
    known.critical_values = {0.0, 1.0};
    auto value = [](const Point& x) {
        const double u = x[0] * x[0] - 1.0;
        return u * u;
    };
    auto grad = [](const Point& x) {
        return Point{4.0 * x[0] * (x[0] * x[0] - 1.0)};
    };
    return Problem("doublewell", 1, value, grad, known);
}

Problem make_rosenbrock(int dim) {
    if (dim < 2) throw InvalidProblem("rosenbrock: dim must be >= 2");
    KnownConstants known;
    known.r_star = 0.0;
    auto value = [](const Point& x) {
        double s = 0.0;
        for (std::size_t i = 0; i + 1 < x.size(); ++i) {
            const double a = x[i + 1] - x[i] * x[i];
            const double b = 1.0 - x[i];
            s += 100.0 * a * a + b * b;
        }
        return s;
    };
    auto grad = [](const Point& x) {
        Point g(x.size(), 0.0);
        for (std::size_t i = 0; i + 1 < x.size(); ++i) {
            const double a = x[i + 1] - x[i] * x[i];
            g[i] += -400.0 * x[i] * a - 2.0 * (1.0 - x[i]);
            g[i + 1] += 200.0 * a;
        }
        return g;
    };
    return Problem("rosenbrock", dim, value, grad, known);
}

Problem make_problem(const std::string& name, int dim, const std::vector<double>& diag) {
    if (name == "quadratic") {
        if (!diag.empty()) return make_quadratic(diag);
        if (dim >= 1) return make_quadratic(std::vector<double>(static_cast<std::size_t>(dim), 1.0));
        throw InvalidProblem("quadratic: provide diag or dim");
    }
    if (name == "cosh") return make_cosh_sum(dim);
    if (name == "nesterov") return make_nesterov_worst(dim);
    if (name == "doublewell") {
        if (dim > 1) throw InvalidProblem("doublewell: dimension is fixed to 1");
        return make_double_well();
    }
    if (name == "rosenbrock") return make_rosenbrock(dim);
    throw InvalidProblem("unknown problem: " + name);
}

}  // namespace armijo
