#include "slcheb/assemble.hpp"

#include <cmath>
#include <utility>

namespace slcheb {

DiscreteEVP eliminate_boundary(const Eigen::MatrixXd& l_full, const Eigen::VectorXd& b_full,
                               const BoundaryCondition& bc_left,
                               const BoundaryCondition& bc_right, const Eigen::MatrixXd& d1,
                               const ChebGrid& grid, const std::string& label) {
    const int n = static_cast<int>(l_full.rows()) - 1;
    const int m = n - 1;
    if (bc_left.c == 0.0 && bc_left.d == 0.0)
        throw Error("eliminate_boundary: left boundary condition has c = d = 0");
    if (bc_right.c == 0.0 && bc_right.d == 0.0)
        throw Error("eliminate_boundary: right boundary condition has c = d = 0");

    // Discretized boundary rows c I + d D1. With descending nodes, row 0 is
    // the right endpoint (x = b) and row N the left one (x = a).
    Eigen::RowVectorXd row_right = bc_right.d * d1.row(0);
    row_right(0) += bc_right.c;
    Eigen::RowVectorXd row_left = bc_left.d * d1.row(n);
    row_left(n) += bc_left.c;

    // Solve the 2x2 system for the endpoint values in terms of the interior:
    //   [rr(0) rr(N)] [y_0]   = - [rr(1..N-1)] u
    //   [rl(0) rl(N)] [y_N]       [rl(1..N-1)]
    // For a Dirichlet row (d = 0) the right-hand side row is exactly zero, so
    // the relation vanishes and the reduction is plain row/column deletion.
    Eigen::Matrix2d corner;
    corner << row_right(0), row_right(n), row_left(0), row_left(n);
    const double det = corner(0, 0) * corner(1, 1) - corner(0, 1) * corner(1, 0);
    const double det_scale = corner.cwiseAbs().maxCoeff();
    if (!(std::abs(det) > 1e-14 * std::max(det_scale * det_scale, 1e-300)))
        throw Error("eliminate_boundary: boundary condition rows are degenerate "
                    "(singular 2x2 endpoint solve)");

    Eigen::Matrix<double, 2, Eigen::Dynamic> rhs(2, m);
    rhs.row(0) = -row_right.segment(1, m);
    rhs.row(1) = -row_left.segment(1, m);
    Eigen::Matrix<double, 2, Eigen::Dynamic> relations(2, m);
    relations.row(0) = (corner(1, 1) * rhs.row(0) - corner(0, 1) * rhs.row(1)) / det;
    relations.row(1) = (corner(0, 0) * rhs.row(1) - corner(1, 0) * rhs.row(0)) / det;

    DiscreteEVP evp{Eigen::MatrixXd(), Eigen::VectorXd(), {}, relations.row(0),
                    relations.row(1), grid, label};
    evp.a_mat = l_full.block(1, 1, m, m);
    evp.a_mat += l_full.block(1, 0, m, 1) * relations.row(0);
    evp.a_mat += l_full.block(1, n, m, 1) * relations.row(1);
    evp.b_diag = b_full.segment(1, m);
    evp.interior_index_map.resize(m);
    for (int k = 0; k < m; ++k) evp.interior_index_map[k] = k + 1;

    for (int k = 0; k < m; ++k)
        if (!(evp.b_diag(k) > 0.0))
            throw Error("eliminate_boundary: weight coefficient not positive at node " +
                        std::to_string(k + 1));
    return evp;
}

DiscreteEVP assemble(const SLProblem& prob, int n) {
    if (n < 4)
        throw Error("assemble: grid order must be >= 4 (reduced system needs at least "
                    "3 rows), got " + std::to_string(n));
    const ChebGrid grid = make_grid(n, prob.domain);
    const DiffMatrices dm = cheb_diff_matrix(grid);
    const CanonicalCoefficients coeff = canonicalize(prob);

    Eigen::VectorXd p_tilde(n + 1), q_tilde(n + 1), w_tilde(n + 1);
    for (int j = 0; j <= n; ++j) {
        const double x = grid.mapped_nodes[j];
        try {
            p_tilde(j) = coeff.p_tilde(x);
            q_tilde(j) = coeff.q_tilde(x);
            w_tilde(j) = coeff.w_tilde(x);
        } catch (const EvalError& e) {
            throw Error("assemble: coefficient evaluation failed at node " +
                        std::to_string(j) + ": " + e.what());
        }
    }

    Eigen::MatrixXd l_full = -dm.d2;
    l_full -= p_tilde.asDiagonal() * dm.d1;
    l_full.diagonal() += q_tilde;
    return eliminate_boundary(l_full, w_tilde, prob.bc_left, prob.bc_right, dm.d1, grid,
                              prob.label);
}

}  // namespace slcheb
