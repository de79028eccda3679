#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "slcheb/problem.hpp"

namespace slcheb {

/// Parsed command line. Exit-code contract across all commands:
/// 0 success, 2 requested-but-unconverged eigenvalues (rows still printed),
/// 1 any other failure.
struct RunConfig {
    enum class Command { solve, example, table, eigenfunction };

    Command command = Command::solve;
    std::optional<std::string> problem_path;
    std::optional<int> example;  // 1..3
    std::optional<double> d_truncation;
    int n = 128;
    int count = 10;
    double tol = 1e-8;
    std::optional<std::string> out_path;
    int samples = 101;
    int table = 0;   // 1..4
    int index = 1;   // eigenfunction index, 1-based
    bool large = false;
};

/// CSV `n,lambda,residual,converged`, one row per requested eigenvalue,
/// certified by resolution doubling at the configured N.
int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Regenerate reference table `which` (1..4) as CSV
/// `n,lambda_computed,lambda_reference,relative_error`.
/// Table 1: example 1, N=256, n=1..40 (WKB reference).
/// Table 2: example 1, N=500, n=100..450 by 50; with `large` also the
///          N=1000 block, n=500..950 by 50.
/// Table 3: example 2 (d=10), N=256, n=0..29 (WKB reference).
/// Table 4: example 3, N=128, n=1..30 (exact reference).
int cmd_table(int which, bool large, std::ostream& out, std::ostream& err);

/// CSV `x,y`: sampled, normalized eigenfunction of a builtin example.
int cmd_eigenfunction(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Dispatch on config.command, honoring --out; maps errors to exit code 1.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace slcheb
