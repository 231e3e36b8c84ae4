#include <cmath>
#include <limits>

#include "doctest.h"

#include "armijo/bounds.hpp"

using namespace armijo;

namespace {

// L0 = L1 = delta = 1, eps = 0.1: the reference configuration every frozen
// value below was derived from (high-precision arithmetic, rounded once).
BoundInputs unit_inputs() {
    BoundInputs b;
    b.L0 = 1.0;
    b.L1 = 1.0;
    b.delta = 1.0;
    b.eps = 0.1;
    return b;
}

}  // namespace

TEST_CASE("iteration bound reproduces the frozen reference value") {
    const BoundValue v = memory_armijo_iteration_bound(unit_inputs());
    REQUIRE(v.applicable);
    CHECK_EQ(v.value, doctest::Approx(899.85183233758260).epsilon(1e-9));
    CHECK_EQ(v.value, doctest::Approx(899.9).epsilon(1e-3));
}

TEST_CASE("iteration bound inverts back to its numerator") {
    BoundInputs b;
    b.L0 = 0.7;
    b.L1 = 2.3;
    b.delta = 2.5;
    b.eps = 0.03;
    b.lambda = 0.3;
    b.f1 = 3.0;
    const BoundValue v = memory_armijo_iteration_bound(b);
    REQUIRE(v.applicable);
    const double log_arg =
        (b.L0 + b.L1 * (2.0 - b.lambda) * b.eps) / (b.L0 + b.L1 * b.eps);
    const double reassembled = v.value * b.lambda * b.eps * std::log(log_arg);
    CHECK_EQ(reassembled, doctest::Approx(b.f1 * b.L1 * b.delta).epsilon(1e-12));
}

TEST_CASE("iteration bound approaches its small-eps equivalent") {
    BoundInputs b = unit_inputs();
    b.eps = 1e-4;
    double ratio = memory_armijo_iteration_bound(b).value / asymptotic_equiv(b).value;
    CHECK_EQ(ratio, doctest::Approx(1.0001249997916927).epsilon(1e-9));
    CHECK_LT(std::abs(ratio - 1.0), 1e-2);
    b.eps = 1e-5;
    ratio = memory_armijo_iteration_bound(b).value / asymptotic_equiv(b).value;
    CHECK_EQ(ratio, doctest::Approx(1.0000124999979167).epsilon(1e-9));
    CHECK_LT(std::abs(ratio - 1.0), 1e-3);
}

TEST_CASE("degenerate lambda = 1 is flagged, not propagated as NaN") {
    BoundInputs b = unit_inputs();
    b.lambda = 1.0;
    const BoundValue it = memory_armijo_iteration_bound(b);
    CHECK_FALSE(it.applicable);
    CHECK(std::isinf(it.value));
    const BoundValue as = asymptotic_equiv(b);
    CHECK_FALSE(as.applicable);
    CHECK(std::isinf(as.value));
}

TEST_CASE("classical regime L1 = 0 is redirected") {
    BoundInputs b = unit_inputs();
    b.L1 = 0.0;
    const BoundValue v = memory_armijo_iteration_bound(b);
    CHECK_FALSE(v.applicable);
    CHECK_NE(v.note.find("classical"), std::string::npos);
    CHECK_FALSE(admissible_step_tilde_eta(1.0, b).applicable);
}

TEST_CASE("asymptotic equivalent: frozen value and edge cases") {
    CHECK_EQ(asymptotic_equiv(unit_inputs()).value, doctest::Approx(800.0).epsilon(1e-9));
    // coefficient is exactly 8 L0 delta / eps^2 at f1 = 2, lambda = 1/2
    BoundInputs b = unit_inputs();
    b.L0 = 3.0;
    b.delta = 7.0;
    b.eps = 2.0;
    CHECK_EQ(asymptotic_equiv(b).value, 8.0 * 3.0 * 7.0 / 4.0);
    b = unit_inputs();
    b.delta = 0.0;
    CHECK_EQ(asymptotic_equiv(b).value, 0.0);
    b.L0 = 0.0;
    CHECK_FALSE(asymptotic_equiv(b).applicable);
}

TEST_CASE("admissible step: frozen value at unit gradient and small-g limit") {
    const BoundInputs b = unit_inputs();
    const BoundValue v = admissible_step_tilde_eta(1.0, b);
    REQUIRE(v.applicable);
    CHECK_EQ(v.value, doctest::Approx(0.22314355131420976).epsilon(1e-9));  // ln(5/4)
    // limit (1 - lambda) / L0 as g -> 0
    CHECK_EQ(admissible_step_tilde_eta(1e-8, b).value, doctest::Approx(0.5).epsilon(1e-6));
    CHECK_THROWS_AS((void)admissible_step_tilde_eta(0.0, b), InvalidInput);
    CHECK_THROWS_AS(
        (void)admissible_step_tilde_eta(std::numeric_limits<double>::infinity(), b),
        InvalidInput);
}

TEST_CASE("h is zero at the origin and negative up to its threshold") {
    CHECK_EQ(h_eval(1.0, 2.0, 1.0, 0.0), 0.0);
    CHECK_EQ(h_eval(1.0, 2.0, 1.0, 0.5), doctest::Approx(-0.35127872929987185).epsilon(1e-12));
    const BoundValue thr = h_threshold(1.0, 2.0, 1.0);
    REQUIRE(thr.applicable);
    CHECK_EQ(thr.value, doctest::Approx(0.69314718055994531).epsilon(1e-12));  // ln 2
    CHECK_LT(h_eval(1.0, 2.0, 1.0, thr.value * 0.999), 0.0);
    CHECK_FALSE(h_threshold(1.0, 1.0, 1.0).applicable);  // needs b > a c
    CHECK_THROWS_AS((void)h_threshold(0.0, 2.0, 1.0), InvalidInput);
    CHECK_THROWS_AS((void)h_eval(1.0, -2.0, 1.0, 0.5), InvalidInput);
}

TEST_CASE("eia step floor") {
    BoundInputs b = unit_inputs();
    b.L = 1.0;
    CHECK_EQ(eia_step_lower_bound(b).value, 0.25);
    b.lambda = 1.0;  // floor collapses to zero, still a statement
    CHECK_EQ(eia_step_lower_bound(b).value, 0.0);
    CHECK(eia_step_lower_bound(b).applicable);
    b.L.reset();
    CHECK_FALSE(eia_step_lower_bound(b).applicable);
}

TEST_CASE("per-iteration evaluation factors") {
    CHECK_EQ(evals_per_iter_memory(2.0, 2.0), 1.0);
    CHECK_EQ(eia_eval_factor(2.0, 2.0), 4.0);
    CHECK_EQ(evals_per_iter_memory(2.0, 4.0), doctest::Approx(1.5).epsilon(1e-15));
    CHECK_EQ(eia_eval_factor(2.0, 4.0), doctest::Approx(5.5).epsilon(1e-15));
    CHECK_THROWS_AS((void)evals_per_iter_memory(1.0, 2.0), InvalidInput);
    CHECK_THROWS_AS((void)eia_eval_factor(2.0, 1.0), InvalidInput);
}

TEST_CASE("gd bounds: frozen values and applicability gates") {
    BoundInputs b = unit_inputs();
    b.M = std::exp(1.0);
    const GdBounds ge = gd_bounds(b);
    REQUIRE(ge.lower.applicable);
    CHECK_EQ(ge.lower.value, doctest::Approx(15.927432588627218).epsilon(1e-9));
    CHECK_EQ(ge.lower.value, doctest::Approx(15.93).epsilon(1e-3));
    b.M = 2.0;
    CHECK_EQ(gd_bounds(b).upper.value, doctest::Approx(1200.0).epsilon(1e-9));

    b.M.reset();
    const GdBounds gna = gd_bounds(b);
    CHECK_FALSE(gna.lower.applicable);
    CHECK_FALSE(gna.upper.applicable);

    b.M = 1.0;  // upper fine, lower needs M > 1
    const GdBounds g1 = gd_bounds(b);
    CHECK(g1.upper.applicable);
    CHECK_FALSE(g1.lower.applicable);

    b.M = 2.0;
    b.delta = 5.0 * b.eps / 8.0;  // numerator vanishes
    CHECK_EQ(gd_bounds(b).lower.value, 0.0);
}

TEST_CASE("clipping bounds: frozen values") {
    const ClippingBounds c = clipping_bounds(unit_inputs());
    CHECK_EQ(c.fixed_threshold.value, doctest::Approx(2020.0).epsilon(1e-9));
    CHECK_EQ(c.averaged.value, doctest::Approx(3180.0).epsilon(1e-9));
    BoundInputs b = unit_inputs();
    b.L0 = 0.0;
    CHECK_FALSE(clipping_bounds(b).fixed_threshold.applicable);
    CHECK_FALSE(clipping_bounds(b).averaged.applicable);
}

TEST_CASE("gradient evaluation estimate") {
    CHECK_EQ(memory_armijo_grad_eval_bound(unit_inputs()).value,
             doctest::Approx(1600.0).epsilon(1e-9));
    BoundInputs b = unit_inputs();
    b.f1 = 3.0;
    CHECK_FALSE(memory_armijo_grad_eval_bound(b).applicable);
    b = unit_inputs();
    b.lambda = 0.25;
    CHECK_FALSE(memory_armijo_grad_eval_bound(b).applicable);
    b = unit_inputs();
    b.delta = 0.0;
    CHECK_EQ(memory_armijo_grad_eval_bound(b).value, 0.0);
}

TEST_CASE("symbolic eia complexity: frozen value and 1/eps scaling") {
    const double v = eia_complexity_bound_symbolic(0.25, 1.0, 0.1, 0.5, 1, 1.0);
    CHECK_EQ(v, doctest::Approx(387.89033159585682).epsilon(1e-9));
    CHECK_EQ(v, doctest::Approx(387.9).epsilon(1e-3));
    const double half = eia_complexity_bound_symbolic(0.25, 1.0, 0.05, 0.5, 1, 1.0);
    CHECK_EQ(half, doctest::Approx(2.0 * v).epsilon(1e-15));
    CHECK_THROWS_AS((void)eia_complexity_bound_symbolic(0.25, 1.0, 0.1, 1.0, 1, 1.0),
                    InvalidInput);
    CHECK_THROWS_AS((void)eia_complexity_bound_symbolic(0.25, 1.0, 0.1, 0.5, -1, 1.0),
                    InvalidInput);
}

TEST_CASE("input validation rejects out-of-domain parameters") {
    BoundInputs b = unit_inputs();
    b.eps = 0.0;
    CHECK_THROWS_AS(b.validate(), InvalidInput);
    b = unit_inputs();
    b.delta = -1.0;
    CHECK_THROWS_AS(b.validate(), InvalidInput);
    b = unit_inputs();
    b.lambda = 0.0;
    CHECK_THROWS_AS(b.validate(), InvalidInput);
    b = unit_inputs();
    b.lambda = 1.5;
    CHECK_THROWS_AS(b.validate(), InvalidInput);
    b = unit_inputs();
    b.f1 = 1.0;
    CHECK_THROWS_AS(b.validate(), InvalidInput);
    b = unit_inputs();
    b.L = -1.0;
    CHECK_THROWS_AS(b.validate(), InvalidInput);
    b = unit_inputs();
    b.M = 0.0;
    CHECK_THROWS_AS(b.validate(), InvalidInput);
    unit_inputs().validate();  // the reference configuration is valid
}
