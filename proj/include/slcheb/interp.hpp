#pragma once

#include <utility>
#include <vector>

#include <Eigen/Core>

#include "slcheb/assemble.hpp"
#include "slcheb/expr.hpp"
#include "slcheb/grid.hpp"

namespace slcheb {

/// Eigenfunction as nodal values on the full grid, boundary values included.
struct Eigenfunction {
    std::vector<double> node_values;  // N+1 entries
    ChebGrid grid;
    double eigenvalue;
    int index;
};

/// Extend an interior eigenvector to the full grid using the endpoint
/// relations stored at assembly (exact zeros for Dirichlet ends).
std::vector<double> reattach_boundary(const Eigen::VectorXd& v, const DiscreteEVP& evp);

/// Second-form barycentric evaluation at x in [a, b]; an exact node hit
/// returns the stored node value.
double bary_eval(const Eigenfunction& f, double x);

/// Scale so the Clenshaw-Curtis w-weighted norm is 1, then fix the sign so
/// the derivative at the left endpoint is positive (first nonzero node value
/// positive on a zero-derivative tie).
Eigenfunction normalize(const Eigenfunction& f, const Expr& w);

/// m equispaced samples over [a, b] via barycentric evaluation.
std::vector<std::pair<double, double>> sample(const Eigenfunction& f, int m);

}  // namespace slcheb
