#pragma once

#include <Eigen/Core>

#include "slcheb/grid.hpp"

namespace slcheb {

/// Dense Chebyshev differentiation matrices of order 1 and 2, rescaled for
/// the grid's interval. d2 = d1 * d1 with the canonical d1 built via the
/// negative-sum diagonal.
struct DiffMatrices {
    int order;
    Eigen::MatrixXd d1;
    Eigen::MatrixXd d2;
    Domain domain;
};

DiffMatrices cheb_diff_matrix(const ChebGrid& grid);

/// Apply the first or second derivative matrix to nodal values.
Eigen::VectorXd apply(const DiffMatrices& matrices, const Eigen::VectorXd& values,
                      int deriv_order);

}  // namespace slcheb
