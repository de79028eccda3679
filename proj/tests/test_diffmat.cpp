#include <cmath>

#include <doctest.h>

#include "slcheb/diffmat.hpp"

using namespace slcheb;

namespace {

Eigen::VectorXd monomial_samples(const ChebGrid& g, int k) {
    Eigen::VectorXd v(g.order + 1);
    for (int j = 0; j <= g.order; ++j) v(j) = std::pow(g.mapped_nodes[j], k);
    return v;
}

}  // namespace

TEST_CASE("d1 for N=1 differentiates the linear Lagrange basis") {
    // l0 = (1+x)/2 and l1 = (1-x)/2 have constant slopes 1/2 and -1/2,
    // so every row of d1 is [1/2, -1/2].
    const auto dm = cheb_diff_matrix(make_grid(1, Domain(-1.0, 1.0)));
    for (int k = 0; k < 2; ++k) {
        CHECK(dm.d1(k, 0) == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(dm.d1(k, 1) == doctest::Approx(-0.5).epsilon(1e-15));
    }
}

TEST_CASE("d1 for N=2 differentiates the quadratic Lagrange basis") {
    // On nodes [1, 0, -1]: l0 = x(x+1)/2, l1 = 1-x^2, l2 = x(x-1)/2 with
    // derivatives x+1/2, -2x, x-1/2 evaluated at the nodes.
    const double expected[3][3] = {{1.5, -2.0, 0.5}, {0.5, 0.0, -0.5}, {-0.5, 2.0, -1.5}};
    const auto dm = cheb_diff_matrix(make_grid(2, Domain(-1.0, 1.0)));
    for (int k = 0; k < 3; ++k)
        for (int j = 0; j < 3; ++j)
            CHECK(dm.d1(k, j) == doctest::Approx(expected[k][j]).epsilon(1e-15));
}

TEST_CASE("constants differentiate to zero and row sums vanish") {
    for (int n : {4, 16, 64}) {
        for (const Domain& d : {Domain(-1.0, 1.0), Domain(0.0, M_PI)}) {
            const auto g = make_grid(n, d);
            const auto dm = cheb_diff_matrix(g);
            const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n + 1);
            CHECK((dm.d1 * ones).cwiseAbs().maxCoeff() <= 1e-11);
            CHECK((dm.d2 * ones).cwiseAbs().maxCoeff() <= 1e-9);
        }
    }
}

TEST_CASE("d1 maps the node vector to ones") {
    for (const Domain& d : {Domain(-1.0, 1.0), Domain(0.0, M_PI), Domain(-10.0, 10.0)}) {
        const auto g = make_grid(24, d);
        const auto dm = cheb_diff_matrix(g);
        Eigen::VectorXd x(25);
        for (int j = 0; j <= 24; ++j) x(j) = g.mapped_nodes[j];
        const Eigen::VectorXd dx = apply(dm, x, 1);
        for (int j = 0; j <= 24; ++j) CHECK(dx(j) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("apply differentiates low-degree polynomials exactly") {
    const auto g = make_grid(8, Domain(-1.0, 1.0));
    const auto dm = cheb_diff_matrix(g);

    const Eigen::VectorXd d2x2 = apply(dm, monomial_samples(g, 2), 2);
    for (int j = 0; j <= 8; ++j) CHECK(d2x2(j) == doctest::Approx(2.0).epsilon(1e-10));

    const Eigen::VectorXd d1x3 = apply(dm, monomial_samples(g, 3), 1);
    for (int j = 0; j <= 8; ++j)
        CHECK(std::abs(d1x3(j) - 3.0 * g.mapped_nodes[j] * g.mapped_nodes[j]) <= 1e-10);
}

TEST_CASE("apply validates input") {
    const auto dm = cheb_diff_matrix(make_grid(4, Domain(-1.0, 1.0)));
    CHECK_THROWS_AS(apply(dm, Eigen::VectorXd::Zero(3), 1), Error);
    CHECK_THROWS_AS(apply(dm, Eigen::VectorXd::Zero(5), 3), Error);
}

TEST_CASE("polynomial differentiation exactness up to the grid degree") {
    for (int n : {4, 8, 16, 32}) {
        const auto g = make_grid(n, Domain(-1.0, 1.0));
        const auto dm = cheb_diff_matrix(g);
        for (int k = 0; k <= n; ++k) {
            const Eigen::VectorXd derived = apply(dm, monomial_samples(g, k), 1);
            double worst = 0.0;
            for (int j = 0; j <= n; ++j) {
                const double exact =
                    (k == 0) ? 0.0 : k * std::pow(g.mapped_nodes[j], k - 1);
                worst = std::max(worst, std::abs(derived(j) - exact));
            }
            CHECK(worst <= 1e-9 * n * n);
        }
    }
}

TEST_CASE("interval scaling multiplies d1 by 2/(b-a) and d2 by its square") {
    const Domain d(0.25, 4.0);
    const auto canonical = cheb_diff_matrix(make_grid(12, Domain(-1.0, 1.0)));
    const auto scaled = cheb_diff_matrix(make_grid(12, d));
    const double s = 2.0 / d.length();
    const double s2 = s * s;
    for (int k = 0; k <= 12; ++k) {
        for (int j = 0; j <= 12; ++j) {
            CHECK(scaled.d1(k, j) == canonical.d1(k, j) * s);
            CHECK(scaled.d2(k, j) == canonical.d2(k, j) * s2);
        }
    }
}
