#include "armijo/core.hpp"

#include <cmath>

namespace armijo {

std::string to_string(Termination t) {
    switch (t) {
        case Termination::GradBelowEps: return "GradBelowEps";
        case Termination::MaxIter: return "MaxIter";
        case Termination::StepUnderflow: return "StepUnderflow";
    }
    return "Unknown";
}

bool all_finite(const Point& p) {
    for (double v : p) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

double dot(const Point& a, const Point& b) {
    if (a.size() != b.size()) throw InvalidInput("dot: size mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

double grad_norm(const Point& p) {
    if (!all_finite(p)) throw NonFiniteValue("grad_norm: non-finite entry");
    return std::sqrt(dot(p, p));
}

Point step_point(const Point& theta, double eta, const Point& g) {
    if (theta.size() != g.size()) throw InvalidInput("step_point: size mismatch");
    Point out(theta.size());
    for (std::size_t i = 0; i < theta.size(); ++i) out[i] = theta[i] - eta * g[i];
    return out;
}

}  // namespace armijo
