#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "armijo/audits.hpp"
#include "armijo/bounds.hpp"
#include "armijo/core.hpp"
#include "armijo/linesearch.hpp"
#include "armijo/optimizers.hpp"
#include "armijo/problems.hpp"
#include "armijo/verification.hpp"

namespace py = pybind11;

PYBIND11_MODULE(armijo, m) {
    m.doc() = "Armijo-type line-search optimizers, complexity bounds, and numerical audits";

    py::register_exception<armijo::NonFiniteValue>(m, "NonFiniteValueError", PyExc_ArithmeticError);

    py::class_<armijo::EvalCounters>(m, "EvalCounters")
        .def(py::init<>())
        .def_readwrite("func_evals", &armijo::EvalCounters::func_evals)
        .def_readwrite("grad_evals", &armijo::EvalCounters::grad_evals)
        .def("__repr__", [](const armijo::EvalCounters& c) {
            return "EvalCounters(func_evals=" + std::to_string(c.func_evals) +
                   ", grad_evals=" + std::to_string(c.grad_evals) + ")";
        });

    py::enum_<armijo::Termination>(m, "Termination")
        .value("GradBelowEps", armijo::Termination::GradBelowEps)
        .value("MaxIter", armijo::Termination::MaxIter)
        .value("StepUnderflow", armijo::Termination::StepUnderflow);

    py::class_<armijo::IterationRecord>(m, "IterationRecord")
        .def_readonly("iter", &armijo::IterationRecord::iter)
        .def_readonly("r_value", &armijo::IterationRecord::r_value)
        .def_readonly("grad_norm", &armijo::IterationRecord::grad_norm)
        .def_readonly("eta", &armijo::IterationRecord::eta)
        .def_readonly("backtracks", &armijo::IterationRecord::backtracks)
        .def_readonly("counters", &armijo::IterationRecord::counters);

    py::class_<armijo::RunTrace>(m, "RunTrace")
        .def_readonly("records", &armijo::RunTrace::records)
        .def_readonly("terminated_by", &armijo::RunTrace::terminated_by)
        .def_readonly("final_point", &armijo::RunTrace::final_point)
        .def_readonly("avg_grad_norms", &armijo::RunTrace::avg_grad_norms)
        .def("iterations", &armijo::RunTrace::iterations);

    py::class_<armijo::KnownConstants>(m, "KnownConstants")
        .def_readonly("L0", &armijo::KnownConstants::L0)
        .def_readonly("L1", &armijo::KnownConstants::L1)
        .def_readonly("L", &armijo::KnownConstants::L)
        .def_readonly("r_star", &armijo::KnownConstants::r_star)
        .def_readonly("critical_values", &armijo::KnownConstants::critical_values);

    py::class_<armijo::Problem>(m, "Problem")
        .def_property_readonly("name", &armijo::Problem::name)
        .def_property_readonly("dim", &armijo::Problem::dim)
        .def_property_readonly("known", &armijo::Problem::known)
        .def("value", &armijo::Problem::value, py::arg("x"), py::arg("counters"))
        .def("gradient", &armijo::Problem::gradient, py::arg("x"), py::arg("counters"));

    m.def("make_quadratic", &armijo::make_quadratic, py::arg("diag"));
    m.def("make_cosh_sum", &armijo::make_cosh_sum, py::arg("dim"));
    m.def("make_nesterov_worst", &armijo::make_nesterov_worst, py::arg("dim"));
    m.def("make_double_well", &armijo::make_double_well);
    m.def("make_rosenbrock", &armijo::make_rosenbrock, py::arg("dim"));
    m.def("make_problem", &armijo::make_problem, py::arg("name"), py::arg("dim") = 0,
          py::arg("diag") = std::vector<double>{});

    py::class_<armijo::LineSearchConfig>(m, "LineSearchConfig")
        .def(py::init<>())
        .def_readwrite("lambda_", &armijo::LineSearchConfig::lambda)
        .def_readwrite("f1", &armijo::LineSearchConfig::f1)
        .def_readwrite("f2", &armijo::LineSearchConfig::f2)
        .def_readwrite("eta_init", &armijo::LineSearchConfig::eta_init)
        .def_readwrite("eps", &armijo::LineSearchConfig::eps)
        .def_readwrite("max_backtracks", &armijo::LineSearchConfig::max_backtracks)
        .def_readwrite("eta_max", &armijo::LineSearchConfig::eta_max)
        .def("validate", &armijo::LineSearchConfig::validate);

    py::class_<armijo::LineSearchOutcome>(m, "LineSearchOutcome")
        .def_readonly("accepted_eta", &armijo::LineSearchOutcome::accepted_eta)
        .def_readonly("next_point", &armijo::LineSearchOutcome::next_point)
        .def_readonly("next_value", &armijo::LineSearchOutcome::next_value)
        .def_readonly("backtracks", &armijo::LineSearchOutcome::backtracks)
        .def_readonly("next_eta_memory", &armijo::LineSearchOutcome::next_eta_memory)
        .def_readonly("next_grad", &armijo::LineSearchOutcome::next_grad);

    m.def("memory_armijo_step", &armijo::memory_armijo_step, py::arg("problem"), py::arg("theta"),
          py::arg("r0"), py::arg("g"), py::arg("eta_in"), py::arg("cfg"), py::arg("counters"));
    m.def("eia_step", &armijo::eia_step, py::arg("problem"), py::arg("theta"), py::arg("r0"),
          py::arg("g"), py::arg("eta_in"), py::arg("cfg"), py::arg("counters"));

    py::class_<armijo::OptimizerConfig>(m, "OptimizerConfig")
        .def(py::init<>())
        .def_readwrite("linesearch", &armijo::OptimizerConfig::linesearch)
        .def_readwrite("gd_eta", &armijo::OptimizerConfig::gd_eta)
        .def_readwrite("clip_eta", &armijo::OptimizerConfig::clip_eta)
        .def_readwrite("clip_gamma", &armijo::OptimizerConfig::clip_gamma)
        .def_readwrite("max_iter", &armijo::OptimizerConfig::max_iter);

    py::class_<armijo::ClipSchedule>(m, "ClipSchedule")
        .def_readonly("eta", &armijo::ClipSchedule::eta)
        .def_readonly("gamma", &armijo::ClipSchedule::gamma);
    m.def("clip_schedule_fixed_threshold", &armijo::clip_schedule_fixed_threshold, py::arg("L0"),
          py::arg("L1"));
    m.def("clip_schedule_averaged", &armijo::clip_schedule_averaged, py::arg("L0"), py::arg("L1"));

    m.def("run_memory_armijo", &armijo::run_memory_armijo, py::arg("problem"), py::arg("theta0"),
          py::arg("cfg"));
    m.def("run_eia", &armijo::run_eia, py::arg("problem"), py::arg("theta0"), py::arg("cfg"));
    m.def("run_gd", &armijo::run_gd, py::arg("problem"), py::arg("theta0"), py::arg("cfg"));
    m.def("run_clipped_gd", &armijo::run_clipped_gd, py::arg("problem"), py::arg("theta0"),
          py::arg("cfg"));

    py::class_<armijo::BoundInputs>(m, "BoundInputs")
        .def(py::init<>())
        .def_readwrite("L0", &armijo::BoundInputs::L0)
        .def_readwrite("L1", &armijo::BoundInputs::L1)
        .def_readwrite("L", &armijo::BoundInputs::L)
        .def_readwrite("M", &armijo::BoundInputs::M)
        .def_readwrite("delta", &armijo::BoundInputs::delta)
        .def_readwrite("eps", &armijo::BoundInputs::eps)
        .def_readwrite("lambda_", &armijo::BoundInputs::lambda)
        .def_readwrite("f1", &armijo::BoundInputs::f1)
        .def_readwrite("f2", &armijo::BoundInputs::f2)
        .def("validate", &armijo::BoundInputs::validate);

    py::class_<armijo::BoundValue>(m, "BoundValue")
        .def_readonly("value", &armijo::BoundValue::value)
        .def_readonly("applicable", &armijo::BoundValue::applicable)
        .def_readonly("note", &armijo::BoundValue::note)
        .def("__repr__", [](const armijo::BoundValue& b) {
            return "BoundValue(value=" + std::to_string(b.value) +
                   ", applicable=" + (b.applicable ? std::string("True") : std::string("False")) +
                   ")";
        });

    py::class_<armijo::GdBounds>(m, "GdBounds")
        .def_readonly("lower", &armijo::GdBounds::lower)
        .def_readonly("upper", &armijo::GdBounds::upper);
    py::class_<armijo::ClippingBounds>(m, "ClippingBounds")
        .def_readonly("fixed_threshold", &armijo::ClippingBounds::fixed_threshold)
        .def_readonly("averaged", &armijo::ClippingBounds::averaged);

    m.def("memory_armijo_iteration_bound", &armijo::memory_armijo_iteration_bound, py::arg("b"));
    m.def("asymptotic_equiv", &armijo::asymptotic_equiv, py::arg("b"));
    m.def("admissible_step_tilde_eta", &armijo::admissible_step_tilde_eta, py::arg("g_norm"),
          py::arg("b"));
    m.def("h_eval", &armijo::h_eval, py::arg("a"), py::arg("b"), py::arg("c"), py::arg("x"));
    m.def("h_threshold", &armijo::h_threshold, py::arg("a"), py::arg("b"), py::arg("c"));
    m.def("eia_step_lower_bound", &armijo::eia_step_lower_bound, py::arg("b"));
    m.def("evals_per_iter_memory", &armijo::evals_per_iter_memory, py::arg("f1"), py::arg("f2"));
    m.def("eia_eval_factor", &armijo::eia_eval_factor, py::arg("f1"), py::arg("f2"));
    m.def("gd_bounds", &armijo::gd_bounds, py::arg("b"));
    m.def("clipping_bounds", &armijo::clipping_bounds, py::arg("b"));
    m.def("memory_armijo_grad_eval_bound", &armijo::memory_armijo_grad_eval_bound, py::arg("b"));
    m.def("eia_complexity_bound_symbolic", &armijo::eia_complexity_bound_symbolic,
          py::arg("eta_star"), py::arg("delta"), py::arg("eps"), py::arg("lambda_"),
          py::arg("s_tilde"), py::arg("phi_at"));
    m.attr("CLIP_AVERAGING_CONSTANT") = armijo::kClipAveragingConstant;

    py::class_<armijo::AuditReport>(m, "AuditReport")
        .def_readonly("name", &armijo::AuditReport::name)
        .def_readonly("samples", &armijo::AuditReport::samples)
        .def_readonly("violations", &armijo::AuditReport::violations)
        .def_readonly("worst_margin", &armijo::AuditReport::worst_margin)
        .def_readonly("applicable", &armijo::AuditReport::applicable)
        .def_readonly("pass_", &armijo::AuditReport::pass)
        .def_readonly("seed", &armijo::AuditReport::seed)
        .def_readonly("note", &armijo::AuditReport::note);

    m.def("sample_points", &armijo::sample_points, py::arg("dim"), py::arg("count"), py::arg("lo"),
          py::arg("hi"), py::arg("seed"));
    m.def("sample_point_pairs", &armijo::sample_point_pairs, py::arg("dim"), py::arg("count"),
          py::arg("lo"), py::arg("hi"), py::arg("seed"));
    m.def("audit_gradient_growth", &armijo::audit_gradient_growth, py::arg("problem"),
          py::arg("pairs"), py::arg("L0"), py::arg("L1"));
    m.def("audit_descent_inequality", &armijo::audit_descent_inequality, py::arg("problem"),
          py::arg("pairs"), py::arg("L0"), py::arg("L1"));
    m.def("audit_finite_diff", &armijo::audit_finite_diff, py::arg("problem"), py::arg("points"));
    m.def("audit_o_small_decay", &armijo::audit_o_small_decay, py::arg("trace"));
    m.def("audit_step_floor", &armijo::audit_step_floor, py::arg("trace"), py::arg("eta_star"));
    m.def("audit_iteration_bound", &armijo::audit_iteration_bound, py::arg("trace"),
          py::arg("bound"));
    m.def("audit_armijo_recheck", &armijo::audit_armijo_recheck, py::arg("trace"),
          py::arg("lambda_"), py::arg("eia"));

    py::class_<armijo::CriterionOutcome>(m, "CriterionOutcome")
        .def_readonly("name", &armijo::CriterionOutcome::name)
        .def_readonly("pass_", &armijo::CriterionOutcome::pass)
        .def_readonly("detail", &armijo::CriterionOutcome::detail);

    py::class_<armijo::SuiteReport>(m, "SuiteReport")
        .def_readonly("criteria", &armijo::SuiteReport::criteria)
        .def_readonly("audits", &armijo::SuiteReport::audits)
        .def_readonly("all_pass", &armijo::SuiteReport::all_pass);

    m.def("run_verification_suite", &armijo::run_verification_suite,
          py::arg("only") = std::vector<std::string>{});
}
