#include "slcheb/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <vector>

#include "slcheb/csv.hpp"
#include "slcheb/interp.hpp"
#include "slcheb/problem_file.hpp"
#include "slcheb/reference.hpp"
#include "slcheb/spectrum.hpp"

namespace slcheb {

namespace {

SLProblem resolve_problem(const RunConfig& config) {
    if (config.problem_path && config.example)
        throw Error("give either a problem file or a builtin example, not both");
    if (config.problem_path) {
        if (config.d_truncation)
            throw Error("--d applies to builtin example 2 only");
        return load_problem_file(*config.problem_path);
    }
    if (config.example) return builtin(*config.example, config.d_truncation);
    throw Error("no problem given: use --problem <file> or --example <1|2|3>");
}

void validate_common(const RunConfig& config) {
    if (config.n < 8) throw Error("--n must be >= 8, got " + std::to_string(config.n));
    if (config.count < 1)
        throw Error("--count must be >= 1, got " + std::to_string(config.count));
    if (!(config.tol > 0.0)) throw Error("--tol must be > 0");
}

ReferenceValue reference_for_table(int which, int n) {
    switch (which) {
        case 1:
        case 2: return ReferenceValue{n, wkb_example1(n), ReferenceValue::Kind::wkb};
        case 3: return ReferenceValue{n, wkb_example2(n), ReferenceValue::Kind::wkb};
        case 4: return ReferenceValue{n, exact_example3(n), ReferenceValue::Kind::exact};
    }
    throw Error("table number must be 1, 2, 3 or 4, got " + std::to_string(which));
}

// Emit table rows for one resolved spectrum. `indices` are table row labels;
// `offset` converts a label to the 0-based sorted position.
void emit_rows(std::ostream& out, int which, const Spectrum& spectrum,
               const std::vector<int>& indices, int offset) {
    for (int n : indices) {
        const std::size_t k = static_cast<std::size_t>(n + offset);
        if (k >= spectrum.size())
            throw Error("eigenvalue " + std::to_string(n) +
                        " not available from the discretization (retained " +
                        std::to_string(spectrum.size()) + ")");
        const double computed = spectrum.eigenvalues[k];
        const ReferenceValue ref = reference_for_table(which, n);
        out << n << ',' << format_sci(computed) << ',' << format_sci(ref.value) << ','
            << format_sci(relative_error(ref.value, computed)) << '\n';
    }
}

std::vector<int> range(int first, int last, int step) {
    std::vector<int> r;
    for (int n = first; n <= last; n += step) r.push_back(n);
    return r;
}

}  // namespace

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err) {
    validate_common(config);
    const SLProblem prob = resolve_problem(config);
    const Spectrum spectrum = certify(prob, config.n, config.tol);

    out << "n,lambda,residual,converged\n";
    bool all_converged = true;
    for (int k = 1; k <= config.count; ++k) {
        const std::size_t idx = static_cast<std::size_t>(k - 1);
        if (idx >= spectrum.size()) {
            err << "requested " << config.count << " eigenvalues, only "
                << spectrum.size() << " retained at N=" << 2 * config.n << "\n";
            all_converged = false;
            break;
        }
        const bool converged = spectrum.converged[idx];
        all_converged = all_converged && converged;
        out << k << ',' << format_sci(spectrum.eigenvalues[idx]) << ','
            << format_sci(spectrum.residuals[idx]) << ','
            << (converged ? "true" : "false") << '\n';
    }
    return all_converged ? 0 : 2;
}

int cmd_table(int which, bool large, std::ostream& out, std::ostream& err) {
    (void)err;
    out << "n,lambda_computed,lambda_reference,relative_error\n";
    switch (which) {
        case 1:
            emit_rows(out, 1, solve(assemble(builtin(1), 256)), range(1, 40, 1), -1);
            return 0;
        case 2:
            emit_rows(out, 2, solve(assemble(builtin(1), 500)), range(100, 450, 50), -1);
            if (large)
                emit_rows(out, 2, solve(assemble(builtin(1), 1000)), range(500, 950, 50),
                          -1);
            return 0;
        case 3:
            emit_rows(out, 3, solve(assemble(builtin(2, 10.0), 256)), range(0, 29, 1), 0);
            return 0;
        case 4:
            emit_rows(out, 4, solve(assemble(builtin(3), 128)), range(1, 30, 1), -1);
            return 0;
        default:
            throw Error("table number must be 1, 2, 3 or 4, got " + std::to_string(which));
    }
}

int cmd_eigenfunction(const RunConfig& config, std::ostream& out, std::ostream& err) {
    validate_common(config);
    if (!config.example) throw Error("eigenfunction requires a builtin --example");
    if (config.index < 1)
        throw Error("--index must be >= 1, got " + std::to_string(config.index));
    if (config.samples < 2)
        throw Error("--samples must be >= 2, got " + std::to_string(config.samples));

    const SLProblem prob = builtin(*config.example, config.d_truncation);
    const Spectrum coarse = solve(assemble(prob, config.n));
    const DiscreteEVP evp = assemble(prob, 2 * config.n);
    const Spectrum spectrum = mark_converged(coarse, solve(evp), config.tol);

    const std::size_t idx = static_cast<std::size_t>(config.index - 1);
    if (idx >= spectrum.size() || !spectrum.converged[idx]) {
        err << "eigenfunction " << config.index << " is not certified converged at N="
            << config.n << "; raise --n\n";
        return 2;
    }

    Eigenfunction f{reattach_boundary(spectrum.eigenvectors.col(static_cast<int>(idx)),
                                      evp),
                    evp.grid, spectrum.eigenvalues[idx], config.index};
    f = normalize(f, prob.w);
    out << "x,y\n";
    for (const auto& [x, y] : sample(f, config.samples))
        out << format_sci(x) << ',' << format_sci(y) << '\n';
    return 0;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        std::ofstream file;
        std::ostream* sink = &out;
        if (config.out_path) {
            file.open(*config.out_path);
            if (!file) throw Error("cannot open output file '" + *config.out_path + "'");
            sink = &file;
        }
        switch (config.command) {
            case RunConfig::Command::solve:
            case RunConfig::Command::example: return cmd_solve(config, *sink, err);
            case RunConfig::Command::table:
                return cmd_table(config.table, config.large, *sink, err);
            case RunConfig::Command::eigenfunction:
                return cmd_eigenfunction(config, *sink, err);
        }
        throw Error("unknown command");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace slcheb
