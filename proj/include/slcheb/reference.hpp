#pragma once

#include "slcheb/domain.hpp"
#include "slcheb/expr.hpp"

namespace slcheb {

/// Reference eigenvalue (closed form or WKB asymptotic) for comparisons.
struct ReferenceValue {
    int n;
    double value;
    enum class Kind { wkb, exact } kind;
};

/// Gamma function via the Lanczos approximation (g = 7, double precision),
/// reflection formula for arguments below 1/2. Good to ~13 significant
/// digits over the range used here.
double gamma_fn(double x);

/// WKB eigenvalue lambda_n ~ [n pi / integral_a^b sqrt(w)]^2 for
/// -y'' = lambda w y with Dirichlet conditions; the integral is evaluated by
/// Clenshaw-Curtis quadrature at fixed order 200.
double wkb_general(const Expr& w, const Domain& domain, int n);

/// Closed form of wkb_general for w = (x+pi)^4 on [0, pi]: 9 n^2 / (49 pi^4).
double wkb_example1(int n);

/// WKB eigenvalues of -y'' + x^4 y = lambda y:
/// [3 Gamma(3/4) (n + 1/2) sqrt(pi) / Gamma(1/4)]^(4/3), n >= 0.
double wkb_example2(int n);

/// Exact eigenvalues of -y'' = lambda y/(1+x)^2 on [0, 1], Dirichlet:
/// 1/4 + (pi n / ln 2)^2, n >= 1.
double exact_example3(int n);

/// Exact eigenfunctions of example 3: sqrt(1+x) sin(pi n ln(1+x) / ln 2).
double exact_eigenfunction_example3(int n, double x);

/// WKB eigenfunctions of example 1:
/// sqrt(6/(7 pi^3)) sin[n (x^3 + 3 x^2 pi + 3 pi^2 x) / (7 pi^2)] / (pi + x).
double wkb_eigenfunction_example1(int n, double x);

/// |exact - computed| / |exact|; exact must be nonzero.
double relative_error(double exact, double computed);

}  // namespace slcheb
