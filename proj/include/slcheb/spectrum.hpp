#pragma once

#include <vector>

#include <Eigen/Core>

#include "slcheb/assemble.hpp"
#include "slcheb/problem.hpp"

namespace slcheb {

/// Sorted real spectrum of a DiscreteEVP. Eigenvector columns hold interior
/// node values aligned with the eigenvalues. Residuals are
/// ||A v - lambda B v||_2 / ||v||_2 against the original pencil. The
/// converged flags are set by certification (all false from a plain solve).
struct Spectrum {
    std::vector<double> eigenvalues;  // strictly ascending
    Eigen::MatrixXd eigenvectors;
    std::vector<double> residuals;
    int n_grid = 0;
    std::vector<bool> converged;

    std::size_t size() const { return eigenvalues.size(); }
    std::size_t converged_count() const;
};

/// Dense solve of the reduced problem: forms B^{-1} A (exact row scaling,
/// B diagonal positive), balances, and runs the QR eigensolver. Pairs with
/// |Im lambda| > 1e-8 (1 + |Re lambda|) or residual > 1e-6 (1 + |lambda|)
/// are discarded; the rest are sorted ascending.
Spectrum solve(const DiscreteEVP& evp);

/// Flag eigenvalues of `fine` as converged when the same sorted index in
/// `coarse` agrees to |d lambda| / (1 + |lambda_fine|) <= tol.
Spectrum mark_converged(const Spectrum& coarse, Spectrum fine, double tol);

/// Resolution-doubling certification: solve at N and 2N, match by sorted
/// index, return the 2N spectrum with convergence flags.
Spectrum certify(const SLProblem& prob, int n, double tol = 1e-8);

/// ||A v - lambda B v||_2 / ||v||_2.
double residual(const DiscreteEVP& evp, double lambda, const Eigen::VectorXd& v);

}  // namespace slcheb
