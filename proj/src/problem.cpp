#include "slcheb/problem.hpp"

#include <cmath>
#include <utility>

namespace slcheb {

namespace {

// Strict positivity on 101 equispaced samples of [a, b]. Sampling rather than
// symbolic analysis; a sign change between samples is out of reach, which is
// acceptable for the coefficient families handled here.
void check_positive(const Expr& f, const char* name, const Domain& domain) {
    for (int i = 0; i <= 100; ++i) {
        const double x = domain.a + (domain.b - domain.a) * i / 100.0;
        double v;
        try {
            v = f.eval(x);
        } catch (const EvalError& e) {
            throw Error(std::string(name) + " not evaluable on the domain: " + e.what());
        }
        if (!(v > 0.0))
            throw Error(std::string(name) + " must be strictly positive on the domain; " +
                        name + "(" + std::to_string(x) + ") = " + std::to_string(v));
    }
}

void check_bc(const BoundaryCondition& bc, const char* side) {
    if (bc.c == 0.0 && bc.d == 0.0)
        throw Error(std::string("boundary condition at the ") + side +
                    " endpoint has c = d = 0");
}

}  // namespace

SLProblem make_problem(Expr p, Expr q, Expr w, Domain domain, BoundaryCondition bc_left,
                       BoundaryCondition bc_right, std::string label) {
    check_bc(bc_left, "left");
    check_bc(bc_right, "right");
    check_positive(p, "p", domain);
    check_positive(w, "w", domain);
    return SLProblem{std::move(p), std::move(q), std::move(w), domain, bc_left, bc_right,
                     std::move(label)};
}

CanonicalCoefficients canonicalize(const SLProblem& prob) {
    const Expr p = prob.p;
    const Expr q = prob.q;
    const Expr w = prob.w;
    const Expr dp = p.derivative();
    return CanonicalCoefficients{
        [dp, p](double x) { return dp.eval(x) / p.eval(x); },
        [q, p](double x) { return q.eval(x) / p.eval(x); },
        [w, p](double x) { return w.eval(x) / p.eval(x); },
    };
}

SLProblem builtin(int example, std::optional<double> d_truncation) {
    const BoundaryCondition dirichlet{1.0, 0.0};
    switch (example) {
        case 1:
            if (d_truncation)
                throw Error("builtin: d_truncation applies to example 2 only");
            return make_problem(parse("1"), parse("0"), parse("(x+pi)^4"),
                                Domain(0.0, M_PI), dirichlet, dirichlet, "example1");
        case 2: {
            if (!d_truncation)
                throw Error("builtin: example 2 requires a truncation half-width d");
            const double d = *d_truncation;
            if (!(d > 0.0))
                throw Error("builtin: truncation half-width d must be > 0, got " +
                            std::to_string(d));
            return make_problem(parse("1"), parse("x^4"), parse("1"), Domain(-d, d),
                                dirichlet, dirichlet, "example2");
        }
        case 3:
            if (d_truncation)
                throw Error("builtin: d_truncation applies to example 2 only");
            return make_problem(parse("1"), parse("0"), parse("1/(1+x)^2"),
                                Domain(0.0, 1.0), dirichlet, dirichlet, "example3");
        default:
            throw Error("builtin: example must be 1, 2 or 3, got " +
                        std::to_string(example));
    }
}

}  // namespace slcheb
