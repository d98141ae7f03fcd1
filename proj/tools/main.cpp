// shafer: evaluate, sweep, verify, minimize and benchmark the Shafer-type
// arcsin bounds from the command line.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace shafer::cli;

    CLI::App app{"Certified arcsin enclosures from the Shafer bound family"};
    app.require_subcommand(1);

    EvalOptions eval;
    auto* eval_cmd = app.add_subcommand("eval", "Enclosure and f_alpha at one point");
    eval_cmd->add_option("--alpha", eval.alpha, "Shape parameter")->required();
    eval_cmd->add_option("--x", eval.x, "Point in (0,1)")->required();

    SweepOptions sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Tabulate regimes and constants over an alpha range (CSV)");
    sweep_cmd->add_option("--alpha-min", sweep.alpha_min)->required();
    sweep_cmd->add_option("--alpha-max", sweep.alpha_max)->required();
    sweep_cmd->add_option("--steps", sweep.steps, "Number of alpha values")->required();
    sweep_cmd->add_option("--grid", sweep.grid, "Uniform grid size for gap profiles")->capture_default_str();
    sweep_cmd->add_option("--out", sweep.out_path, "Output CSV path")->required();

    VerifyOptions verify;
    double verify_alpha = 0.0;
    auto* verify_cmd = app.add_subcommand("verify", "Run the grid verification of all claims");
    auto* alpha_opt = verify_cmd->add_option("--alpha", verify_alpha, "Single alpha to verify");
    auto* suite_flag = verify_cmd->add_flag("--suite", verify.suite, "Verify the built-in alpha suite");
    alpha_opt->excludes(suite_flag);
    verify_cmd->add_option("--grid", verify.grid, "Uniform grid size")->capture_default_str();
    verify_cmd->add_option("--tol", verify.tol, "Relative slack for strict inequalities")->capture_default_str();

    MinimizeOptions minimize;
    auto* minimize_cmd = app.add_subcommand("minimize", "Interior minimum of f_alpha in the middle regime");
    minimize_cmd->add_option("--alpha", minimize.alpha)->required();
    minimize_cmd->add_option("--xtol", minimize.xtol)->capture_default_str();

    BenchOptions bench;
    auto* bench_cmd = app.add_subcommand("bench", "Time bound evaluation against std::asin");
    bench_cmd->add_option("--iters", bench.iters)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (*eval_cmd) return cmd_eval(eval, std::cout, std::cerr);
    if (*sweep_cmd) return cmd_sweep(sweep, std::cout, std::cerr);
    if (*verify_cmd) {
        if (*alpha_opt) verify.alpha = verify_alpha;
        return cmd_verify(verify, std::cout, std::cerr);
    }
    if (*minimize_cmd) return cmd_minimize(minimize, std::cout, std::cerr);
    if (*bench_cmd) return cmd_bench(bench, std::cout, std::cerr);
    return kExitUsage;
}
