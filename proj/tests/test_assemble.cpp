#include <cmath>

#include <doctest.h>

#include "slcheb/assemble.hpp"

using namespace slcheb;

namespace {

const BoundaryCondition kDirichlet{1.0, 0.0};

}  // namespace

TEST_CASE("hand-computed 1x1 reduction of -y'' = lambda y on [0, pi] at N=2") {
    // Canonical d1 row 1 is [1/2, 0, -1/2]; squaring gives the interior d2
    // entry -2, scaled by (2/pi)^2 and negated: 8/pi^2.
    const ChebGrid grid = make_grid(2, Domain(0.0, M_PI));
    const DiffMatrices dm = cheb_diff_matrix(grid);
    const Eigen::MatrixXd l_full = -dm.d2;
    const Eigen::VectorXd b_full = Eigen::VectorXd::Ones(3);
    const DiscreteEVP evp =
        eliminate_boundary(l_full, b_full, kDirichlet, kDirichlet, dm.d1, grid, "tiny");
    REQUIRE(evp.a_mat.rows() == 1);
    CHECK(evp.a_mat(0, 0) ==
          doctest::Approx(0.8105694691387022).epsilon(1e-14));  // 8/pi^2
    CHECK(evp.b_diag(0) == 1.0);
}

TEST_CASE("assemble enforces the minimum grid order") {
    CHECK_THROWS_AS(assemble(builtin(3), 3), Error);
    CHECK_THROWS_AS(assemble(builtin(3), 0), Error);
    CHECK_NOTHROW(assemble(builtin(3), 4));
}

TEST_CASE("dirichlet-dirichlet reduces to the interior block") {
    const int n = 10;
    const SLProblem prob =
        make_problem(parse("1"), parse("0"), parse("1"), Domain(-1.0, 1.0), kDirichlet,
                     kDirichlet, "free");
    const DiscreteEVP evp = assemble(prob, n);
    REQUIRE(evp.a_mat.rows() == n - 1);
    REQUIRE(evp.interior_index_map.size() == static_cast<std::size_t>(n - 1));
    for (int k = 0; k < n - 1; ++k) CHECK(evp.interior_index_map[k] == k + 1);

    // reduced matrix equals the negated interior block of D2, entrywise
    const DiffMatrices dm = cheb_diff_matrix(evp.grid);
    for (int i = 0; i < n - 1; ++i)
        for (int j = 0; j < n - 1; ++j)
            CHECK(evp.a_mat(i, j) == -dm.d2(i + 1, j + 1));

    // endpoint relations vanish identically for Dirichlet ends
    CHECK(evp.right_endpoint_relation.cwiseAbs().maxCoeff() == 0.0);
    CHECK(evp.left_endpoint_relation.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("b_diag carries the weight at the interior mapped nodes") {
    const DiscreteEVP evp = assemble(builtin(1), 16);
    for (int k = 0; k < evp.a_mat.rows(); ++k) {
        const double x = evp.grid.mapped_nodes[evp.interior_index_map[k]];
        const double w = std::pow(x + M_PI, 4);
        CHECK(std::abs(evp.b_diag(k) - w) <= 1e-14 * w);
    }
}

TEST_CASE("quartic potential enters the diagonal") {
    const DiscreteEVP evp = assemble(builtin(2, 10.0), 12);
    const DiffMatrices dm = cheb_diff_matrix(evp.grid);
    for (int i = 0; i < evp.a_mat.rows(); ++i) {
        for (int j = 0; j < evp.a_mat.cols(); ++j) {
            double expected = -dm.d2(i + 1, j + 1);
            if (i == j) expected += std::pow(evp.grid.mapped_nodes[i + 1], 4);
            CHECK(evp.a_mat(i, j) == doctest::Approx(expected).epsilon(1e-15));
        }
    }
}

TEST_CASE("first-derivative coupling for nonconstant p") {
    // p = 1+x on [0, 1]: L = -D2 - diag(1/(1+x)) D1
    const SLProblem prob = make_problem(parse("1+x"), parse("0"), parse("1"),
                                        Domain(0.0, 1.0), kDirichlet, kDirichlet, "");
    const DiscreteEVP evp = assemble(prob, 8);
    const DiffMatrices dm = cheb_diff_matrix(evp.grid);
    for (int i = 0; i < evp.a_mat.rows(); ++i) {
        const double x = evp.grid.mapped_nodes[i + 1];
        for (int j = 0; j < evp.a_mat.cols(); ++j) {
            const double expected = -dm.d2(i + 1, j + 1) - dm.d1(i + 1, j + 1) / (1.0 + x);
            CHECK(evp.a_mat(i, j) == doctest::Approx(expected).epsilon(1e-14));
        }
        // b = w/p at the interior node
        CHECK(evp.b_diag(i) == doctest::Approx(1.0 / (1.0 + x)).epsilon(1e-15));
    }
}

TEST_CASE("robin elimination satisfies the boundary rows") {
    // Neumann left (c=0, d=1), Dirichlet right, N=4: reduced dimension 3 and
    // the reconstructed endpoint values satisfy both boundary conditions.
    const BoundaryCondition neumann{0.0, 1.0};
    const SLProblem prob = make_problem(parse("1"), parse("0"), parse("1"),
                                        Domain(-1.0, 1.0), neumann, kDirichlet, "mixed");
    const int n = 4;
    const DiscreteEVP evp = assemble(prob, n);
    REQUIRE(evp.a_mat.rows() == n - 1);

    const DiffMatrices dm = cheb_diff_matrix(evp.grid);
    Eigen::VectorXd v(n - 1);
    v << 0.3, -1.2, 0.7;
    Eigen::VectorXd full(n + 1);
    full(0) = evp.right_endpoint_relation.dot(v);
    full(n) = evp.left_endpoint_relation.dot(v);
    full.segment(1, n - 1) = v;

    const Eigen::VectorXd dfull = dm.d1 * full;
    CHECK(std::abs(dfull(n)) <= 1e-12 * dfull.cwiseAbs().maxCoeff());  // y'(a) = 0
    CHECK(full(0) == 0.0);                                             // y(b) = 0
    // Dirichlet end eliminates by plain deletion: relation identically zero
    CHECK(evp.right_endpoint_relation.cwiseAbs().maxCoeff() == 0.0);
    CHECK(evp.left_endpoint_relation.cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("degenerate boundary rows are rejected") {
    // A zeroed derivative row makes both derivative-only conditions collapse.
    const ChebGrid grid = make_grid(4, Domain(-1.0, 1.0));
    const Eigen::MatrixXd l_full = Eigen::MatrixXd::Identity(5, 5);
    const Eigen::VectorXd b_full = Eigen::VectorXd::Ones(5);
    const Eigen::MatrixXd d1_degenerate = Eigen::MatrixXd::Zero(5, 5);
    CHECK_THROWS_AS(eliminate_boundary(l_full, b_full, BoundaryCondition{0, 1},
                                       BoundaryCondition{0, 1}, d1_degenerate, grid, ""),
                    Error);
}

TEST_CASE("coefficient evaluation failures carry the node position") {
    // q = ln(x) is not evaluable at the x = 0 endpoint node
    const SLProblem prob = make_problem(parse("1"), parse("ln(x)"), parse("1"),
                                        Domain(0.0, 1.0), kDirichlet, kDirichlet, "");
    CHECK_THROWS_AS(assemble(prob, 8), Error);
    try {
        assemble(prob, 8);
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("node") != std::string::npos);
    }
}
