#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "armijo/optimizers.hpp"
#include "armijo/problems.hpp"
#include "armijo/report.hpp"
#include "armijo/verification.hpp"

namespace {

// Exit codes: 0 converged (GradBelowEps), 2 budget (MaxIter), 3 step
// underflow, 64 usage/validation, 74 I/O, 1 runtime failure.
constexpr int kExitUsage = 64;
constexpr int kExitIo = 74;

struct RunOptions {
    std::string problem;
    int dim = 0;
    std::vector<double> diag;
    std::string optimizer;
    std::string theta0 = "ones";
    double lambda = 0.5;
    double f1 = 2.0;
    double f2 = 2.0;
    double eta_init = 1.0;
    double eps = 1e-6;
    double eta_max = 1e12;
    int max_backtracks = 200;
    int max_iter = 100000;
    std::optional<double> gd_eta;
    std::optional<double> clip_eta;
    std::optional<double> clip_gamma;
    std::string clip_schedule;  // "", "fixed-threshold", "averaged"
    std::string trace_csv;
    std::string summary_json;
};

void add_run_flags(CLI::App* cmd, RunOptions& o) {
    cmd->add_option("--problem", o.problem, "quadratic | cosh | nesterov | doublewell | rosenbrock")
        ->required();
    cmd->add_option("--dim", o.dim, "problem dimension (quadratic may use --diag instead)");
    cmd->add_option("--diag", o.diag, "quadratic diagonal entries")->delimiter(',');
    cmd->add_option("--optimizer", o.optimizer, "memory-armijo | eia | gd | clipped-gd")
        ->required();
    cmd->add_option("--theta0", o.theta0, "ones | zeros | comma-separated coordinates");
    cmd->add_option("--lambda", o.lambda, "sufficient-decrease fraction in (0,1)");
    cmd->add_option("--f1", o.f1, "backtracking shrink factor > 1");
    cmd->add_option("--f2", o.f2, "memory inflation factor > 1");
    cmd->add_option("--eta-init", o.eta_init, "initial trial step");
    cmd->add_option("--eps", o.eps, "stationarity threshold > 0");
    cmd->add_option("--eta-max", o.eta_max, "cap for the memory step");
    cmd->add_option("--max-backtracks", o.max_backtracks, "trial budget per line search");
    cmd->add_option("--max-iter", o.max_iter, "outer iteration budget");
    cmd->add_option("--gd-eta", o.gd_eta, "constant GD step");
    cmd->add_option("--clip-eta", o.clip_eta, "clipped GD step");
    cmd->add_option("--clip-gamma", o.clip_gamma, "clipped GD norm threshold");
    cmd->add_option("--clip-schedule", o.clip_schedule,
                    "fixed-threshold | averaged (fills clip-eta/gamma from known L0, L1)")
        ->check(CLI::IsMember({"fixed-threshold", "averaged"}));
}

armijo::Point parse_theta0(const std::string& spec, int dim) {
    if (spec == "ones") return armijo::Point(static_cast<std::size_t>(dim), 1.0);
    if (spec == "zeros") return armijo::Point(static_cast<std::size_t>(dim), 0.0);
    armijo::Point out;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(token, &used);
        } catch (const std::exception&) {
            throw armijo::InvalidInput("theta0: cannot parse '" + token + "'");
        }
        if (used != token.size()) throw armijo::InvalidInput("theta0: cannot parse '" + token + "'");
        out.push_back(v);
    }
    if (static_cast<int>(out.size()) != dim)
        throw armijo::InvalidInput("theta0 has " + std::to_string(out.size()) +
                                   " coordinates; problem dimension is " + std::to_string(dim));
    return out;
}

armijo::OptimizerConfig build_config(const RunOptions& o, const armijo::Problem& problem) {
    armijo::OptimizerConfig cfg;
    cfg.linesearch.lambda = o.lambda;
    cfg.linesearch.f1 = o.f1;
    cfg.linesearch.f2 = o.f2;
    cfg.linesearch.eta_init = o.eta_init;
    cfg.linesearch.eps = o.eps;
    cfg.linesearch.eta_max = o.eta_max;
    cfg.linesearch.max_backtracks = o.max_backtracks;
    cfg.max_iter = o.max_iter;
    cfg.gd_eta = o.gd_eta;
    cfg.clip_eta = o.clip_eta;
    cfg.clip_gamma = o.clip_gamma;
    if (!o.clip_schedule.empty()) {
        const auto& known = problem.known();
        if (!known.L0 || !known.L1)
            throw armijo::InvalidInput("--clip-schedule needs a problem with known L0 and L1");
        const armijo::ClipSchedule s = o.clip_schedule == "averaged"
                                           ? armijo::clip_schedule_averaged(*known.L0, *known.L1)
                                           : armijo::clip_schedule_fixed_threshold(*known.L0,
                                                                                   *known.L1);
        cfg.clip_eta = s.eta;
        cfg.clip_gamma = s.gamma;
    }
    return cfg;
}

armijo::RunTrace dispatch_run(const RunOptions& o, const armijo::Problem& problem,
                              const armijo::Point& theta0, const armijo::OptimizerConfig& cfg) {
    if (o.optimizer == "memory-armijo") return armijo::run_memory_armijo(problem, theta0, cfg);
    if (o.optimizer == "eia") return armijo::run_eia(problem, theta0, cfg);
    if (o.optimizer == "gd") return armijo::run_gd(problem, theta0, cfg);
    if (o.optimizer == "clipped-gd") return armijo::run_clipped_gd(problem, theta0, cfg);
    throw armijo::InvalidInput("unknown optimizer: " + o.optimizer);
}

int termination_exit_code(armijo::Termination t) {
    switch (t) {
        case armijo::Termination::GradBelowEps: return 0;
        case armijo::Termination::MaxIter: return 2;
        case armijo::Termination::StepUnderflow: return 3;
    }
    return 1;
}

std::ofstream open_or_throw(const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // binary keeps '\n' endings everywhere
    if (!out) throw std::ios_base::failure("cannot open " + path);
    return out;
}

int cmd_run(const RunOptions& o) {
    const armijo::Problem problem = armijo::make_problem(o.problem, o.dim, o.diag);
    const armijo::Point theta0 = parse_theta0(o.theta0, problem.dim());
    const armijo::OptimizerConfig cfg = build_config(o, problem);
    const armijo::RunTrace trace = dispatch_run(o, problem, theta0, cfg);

    if (!o.trace_csv.empty()) {
        auto out = open_or_throw(o.trace_csv);
        armijo::write_trace_csv(out, trace);
    }
    const nlohmann::json summary = armijo::run_summary_json(trace);
    if (!o.summary_json.empty()) {
        auto out = open_or_throw(o.summary_json);
        out << summary.dump(2) << '\n';
    }
    std::cout << summary.dump(2) << '\n';
    return termination_exit_code(trace.terminated_by);
}

int cmd_sweep_eps(const RunOptions& o, const std::vector<double>& eps_list,
                  const std::string& out_path) {
    if (o.optimizer != "memory-armijo" && o.optimizer != "eia")
        throw armijo::InvalidInput("sweep-eps needs an Armijo-family optimizer");

    const armijo::Problem problem = armijo::make_problem(o.problem, o.dim, o.diag);
    const armijo::Point theta0 = parse_theta0(o.theta0, problem.dim());
    const auto& known = problem.known();

    // delta for the bound columns; scratch counters, not part of any run
    std::optional<double> delta;
    if (known.r_star) {
        armijo::EvalCounters scratch;
        delta = problem.value(theta0, scratch) - *known.r_star;
    }

    std::ostringstream csv;
    csv << "eps,iterations,bound,func_evals,grad_evals,bound_evals\n";
    int exit_code = 0;
    for (double eps : eps_list) {  // emitted in the given order, never resorted
        RunOptions per = o;
        per.eps = eps;
        const armijo::OptimizerConfig cfg = build_config(per, problem);
        const armijo::RunTrace trace = dispatch_run(per, problem, theta0, cfg);
        exit_code = std::max(exit_code, termination_exit_code(trace.terminated_by));

        armijo::BoundInputs b;
        b.lambda = o.lambda;
        b.f1 = o.f1;
        b.f2 = o.f2;
        b.eps = eps;
        double bound = std::numeric_limits<double>::quiet_NaN();
        double bound_evals = std::numeric_limits<double>::quiet_NaN();
        if (known.L0 && known.L1 && delta) {
            b.L0 = *known.L0;
            b.L1 = *known.L1;
            b.delta = *delta;
            const armijo::BoundValue it = armijo::memory_armijo_iteration_bound(b);
            if (it.applicable) bound = it.value;
            const armijo::BoundValue ev = armijo::memory_armijo_grad_eval_bound(b);
            if (ev.applicable) bound_evals = ev.value;
        }
        const auto& counters = trace.records.back().counters;
        csv << armijo::format_double(eps) << ',' << trace.iterations() << ','
            << armijo::format_double(bound) << ',' << counters.func_evals << ','
            << counters.grad_evals << ',' << armijo::format_double(bound_evals) << '\n';
    }

    if (out_path.empty()) {
        std::cout << csv.str();
    } else {
        auto out = open_or_throw(out_path);
        out << csv.str();
    }
    return exit_code;
}

int cmd_verify(const std::vector<std::string>& only, const std::string& out_path) {
    const armijo::SuiteReport report = armijo::run_verification_suite(only);

    nlohmann::json j;
    j["audits"] = nlohmann::json::array();
    for (const auto& a : report.audits) j["audits"].push_back(armijo::audit_json(a));
    j["bounds"] = nlohmann::json::array();
    for (const auto& e : report.bounds) j["bounds"].push_back(armijo::bound_entry_json(e));
    j["pass"] = report.all_pass;

    {
        auto out = open_or_throw(out_path);
        out << j.dump(2) << '\n';
    }
    for (const auto& c : report.criteria)
        std::cout << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << " — " << c.detail << '\n';
    std::cout << (report.all_pass ? "verification: all criteria passed\n"
                                  : "verification: FAILURES present\n");
    std::cout << "report written to " << out_path << '\n';
    return report.all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Armijo-type line search optimizers, complexity bounds, and numerical audits"};
    app.require_subcommand(1);

    RunOptions run_opts;
    auto* run_cmd = app.add_subcommand("run", "execute one optimizer run");
    add_run_flags(run_cmd, run_opts);
    run_cmd->add_option("--trace-csv", run_opts.trace_csv, "write the per-iteration trace here");
    run_cmd->add_option("--summary-json", run_opts.summary_json, "write the JSON summary here");

    RunOptions sweep_opts;
    std::vector<double> eps_list;
    std::string sweep_out;
    auto* sweep_cmd = app.add_subcommand("sweep-eps", "one run per eps; iterations vs bound CSV");
    add_run_flags(sweep_cmd, sweep_opts);
    sweep_cmd->add_option("--eps-list", eps_list, "eps values, run in the given order")
        ->required()
        ->delimiter(',');
    sweep_cmd->add_option("--out", sweep_out, "CSV path (stdout when omitted)");

    std::vector<std::string> verify_only;
    std::string verify_out = "verification.json";
    auto* verify_cmd = app.add_subcommand("verify", "run the acceptance suite and audits");
    verify_cmd->add_option("--only", verify_only, "substring filter on criterion/audit names");
    verify_cmd->add_option("--out", verify_out, "report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the message
        return kExitUsage;
    }

    try {
        if (run_cmd->parsed()) return cmd_run(run_opts);
        if (sweep_cmd->parsed()) {
            if (eps_list.empty()) throw armijo::InvalidInput("eps-list must not be empty");
            return cmd_sweep_eps(sweep_opts, eps_list, sweep_out);
        }
        if (verify_cmd->parsed()) return cmd_verify(verify_only, verify_out);
    } catch (const armijo::InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const armijo::InvalidProblem& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "io error: " << e.what() << '\n';
        return kExitIo;
    } catch (const armijo::NonFiniteValue& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "fatal: " << e.what() << '\n';
        return 1;
    }
    return kExitUsage;
}
