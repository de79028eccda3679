#pragma once

#include <vector>

#include "slcheb/domain.hpp"

namespace slcheb {

/// Chebyshev-Gauss-Lobatto collocation grid: N+1 nodes descending from +1 to
/// -1 in the canonical variable, together with barycentric weights and
/// Clenshaw-Curtis quadrature weights scaled to the physical interval.
struct ChebGrid {
    int order;                         // N, grid has N+1 nodes
    std::vector<double> nodes;         // cos(j pi / N), strictly decreasing
    std::vector<double> mapped_nodes;  // ((b-a) nodes[j] + b + a) / 2
    std::vector<double> bary_weights;  // alternating signs, halved endpoints
    std::vector<double> quad_weights;  // sum to b - a
    Domain domain;
};

/// Chebyshev points cos(j pi / N), j = 0..N, computed in the symmetric sin
/// form so that x_j = -x_{N-j} holds bitwise.
std::vector<double> cheb_points(int n);

/// Clenshaw-Curtis quadrature weights on [-1, 1] for the N+1 Chebyshev
/// points; exact for polynomials of degree <= N when N is even.
std::vector<double> clenshaw_curtis_weights(int n);

ChebGrid make_grid(int n, const Domain& domain);

}  // namespace slcheb
