#include <iostream>

#include <CLI11.hpp>

#include "slcheb/cli.hpp"

namespace {

void add_problem_flags(CLI::App* cmd, slcheb::RunConfig& config) {
    cmd->add_option("--problem", config.problem_path, "Problem definition file");
    cmd->add_option("--example", config.example, "Builtin example (1, 2 or 3)");
    cmd->add_option("--d", config.d_truncation,
                    "Truncation half-width for example 2 (domain [-d, d])");
}

void add_solver_flags(CLI::App* cmd, slcheb::RunConfig& config) {
    cmd->add_option("--n", config.n, "Collocation grid order (>= 8)");
    cmd->add_option("--tol", config.tol, "Convergence certification tolerance");
    cmd->add_option("--out", config.out_path, "Write CSV to this file instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sturm-Liouville eigenvalue solver (Chebyshev spectral collocation)"};
    app.require_subcommand(1);

    slcheb::RunConfig config;

    auto* solve = app.add_subcommand(
        "solve", "Solve a problem from a file or a builtin example; CSV spectrum output");
    add_problem_flags(solve, config);
    add_solver_flags(solve, config);
    solve->add_option("--count", config.count, "Number of eigenvalues to report");

    auto* example = app.add_subcommand(
        "example", "Solve builtin example <k>; shorthand for solve --example <k>");
    example->add_option("k", config.example, "Builtin example (1, 2 or 3)")->required();
    example->add_option("--d", config.d_truncation,
                        "Truncation half-width for example 2");
    add_solver_flags(example, config);
    example->add_option("--count", config.count, "Number of eigenvalues to report");

    auto* table = app.add_subcommand(
        "table", "Regenerate reference table <which> (1-4) as CSV");
    table->add_option("which", config.table, "Table number (1-4)")->required();
    table->add_flag("--large", config.large,
                    "Also run table 2's N=1000 block (slow, dense 999x999 solve)");
    table->add_option("--out", config.out_path, "Write CSV to this file");

    auto* eigenfunction = app.add_subcommand(
        "eigenfunction", "Sample one normalized eigenfunction of a builtin example");
    eigenfunction->add_option("--example", config.example, "Builtin example (1, 2 or 3)")
        ->required();
    eigenfunction->add_option("--d", config.d_truncation,
                              "Truncation half-width for example 2 (default 10)");
    eigenfunction->add_option("--index", config.index, "Eigenfunction index (1-based)");
    eigenfunction->add_option("--samples", config.samples, "Number of sample points");
    add_solver_flags(eigenfunction, config);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (solve->parsed()) config.command = slcheb::RunConfig::Command::solve;
    if (example->parsed()) config.command = slcheb::RunConfig::Command::example;
    if (table->parsed()) config.command = slcheb::RunConfig::Command::table;
    if (eigenfunction->parsed()) {
        config.command = slcheb::RunConfig::Command::eigenfunction;
        if (config.example && *config.example == 2 && !config.d_truncation)
            config.d_truncation = 10.0;
    }
    return slcheb::run(config, std::cout, std::cerr);
}
