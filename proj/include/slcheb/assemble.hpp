#pragma once

#include <string>
#include <vector>

#include <Eigen/Core>

#include "slcheb/diffmat.hpp"
#include "slcheb/grid.hpp"
#include "slcheb/problem.hpp"

namespace slcheb {

/// Reduced square generalized eigenproblem a_mat y = lambda diag(b_diag) y
/// obtained from the full collocation operator by eliminating the two
/// boundary rows. For Dirichlet-Dirichlet this is the interior block
/// (m = N - 1). The endpoint relations reconstruct boundary values from an
/// interior eigenvector: y(node 0) = right_endpoint_relation . v,
/// y(node N) = left_endpoint_relation . v (identically zero for Dirichlet).
struct DiscreteEVP {
    Eigen::MatrixXd a_mat;
    Eigen::VectorXd b_diag;  // strictly positive
    std::vector<int> interior_index_map;
    Eigen::VectorXd right_endpoint_relation;
    Eigen::VectorXd left_endpoint_relation;
    ChebGrid grid;
    std::string label;
};

/// Discretize: L = -D2 - diag(p_tilde) D1 + diag(q_tilde) on the mapped grid
/// (D matrices already carry the interval scaling), B = diag(w_tilde), then
/// eliminate the boundary conditions. Requires N >= 4 so the reduced system
/// has at least 3 rows.
DiscreteEVP assemble(const SLProblem& prob, int n);

/// Boundary elimination. Dirichlet (d = 0) deletes the endpoint row and
/// column; otherwise the two discretized boundary rows are solved for the
/// endpoint values as linear combinations of interior values and substituted
/// into the interior rows. Node 0 is the right endpoint (x = b), node N the
/// left one.
DiscreteEVP eliminate_boundary(const Eigen::MatrixXd& l_full, const Eigen::VectorXd& b_full,
                               const BoundaryCondition& bc_left,
                               const BoundaryCondition& bc_right, const Eigen::MatrixXd& d1,
                               const ChebGrid& grid, const std::string& label);

}  // namespace slcheb
