#pragma once

#include <functional>
#include <optional>
#include <string>

#include "slcheb/domain.hpp"
#include "slcheb/expr.hpp"

namespace slcheb {

/// One separated boundary condition c*y + d*y' = 0; (c, d) != (0, 0).
struct BoundaryCondition {
    double c;
    double d;

    bool is_dirichlet() const { return d == 0.0; }
};

/// Sturm-Liouville problem -(p y')' + q y = lambda w y on [a, b] with one
/// boundary condition at each endpoint. p and w must be strictly positive;
/// this is checked on 101 equispaced sample points at construction.
struct SLProblem {
    Expr p;
    Expr q;
    Expr w;
    Domain domain;
    BoundaryCondition bc_left;
    BoundaryCondition bc_right;
    std::string label;
};

/// Validating constructor for SLProblem.
SLProblem make_problem(Expr p, Expr q, Expr w, Domain domain, BoundaryCondition bc_left,
                       BoundaryCondition bc_right, std::string label);

/// Coefficients of the first-normal-form operator
/// -y'' - p_tilde y' + q_tilde y = lambda w_tilde y, with
/// p_tilde = p'/p, q_tilde = q/p, w_tilde = w/p.
struct CanonicalCoefficients {
    std::function<double(double)> p_tilde;
    std::function<double(double)> q_tilde;
    std::function<double(double)> w_tilde;
};

CanonicalCoefficients canonicalize(const SLProblem& prob);

/// Registry of the three builtin example problems:
///   1: p=1, q=0, w=(x+pi)^4 on [0, pi], Dirichlet
///   2: p=1, q=x^4, w=1 on [-d, d], Dirichlet (d_truncation required, > 0)
///   3: p=1, q=0, w=1/(1+x)^2 on [0, 1], Dirichlet
SLProblem builtin(int example, std::optional<double> d_truncation = std::nullopt);

}  // namespace slcheb
