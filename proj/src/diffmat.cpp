#include "slcheb/diffmat.hpp"

namespace slcheb {

DiffMatrices cheb_diff_matrix(const ChebGrid& grid) {
    const int n = grid.order;
    const auto& x = grid.nodes;

    // Canonical first-derivative matrix on [-1, 1]: off-diagonal entries
    // (c_k / c_j) (-1)^{k+j} / (x_k - x_j) with c = 2 at the endpoints,
    // diagonal replaced by the negated row sum so constants differentiate
    // to exactly zero.
    Eigen::MatrixXd d1 = Eigen::MatrixXd::Zero(n + 1, n + 1);
    for (int k = 0; k <= n; ++k) {
        const double ck = (k == 0 || k == n) ? 2.0 : 1.0;
        double row_sum = 0.0;
        for (int j = 0; j <= n; ++j) {
            if (j == k) continue;
            const double cj = (j == 0 || j == n) ? 2.0 : 1.0;
            const double sign = ((k + j) % 2 == 0) ? 1.0 : -1.0;
            d1(k, j) = (ck / cj) * sign / (x[k] - x[j]);
            row_sum += d1(k, j);
        }
        d1(k, k) = -row_sum;
    }

    Eigen::MatrixXd d2 = d1 * d1;

    const double scale = 2.0 / grid.domain.length();
    const double scale2 = scale * scale;
    d1 *= scale;
    d2 *= scale2;
    return DiffMatrices{n, std::move(d1), std::move(d2), grid.domain};
}

Eigen::VectorXd apply(const DiffMatrices& matrices, const Eigen::VectorXd& values,
                      int deriv_order) {
    if (values.size() != matrices.order + 1)
        throw Error("apply: expected " + std::to_string(matrices.order + 1) +
                    " values, got " + std::to_string(values.size()));
    switch (deriv_order) {
        case 1: return matrices.d1 * values;
        case 2: return matrices.d2 * values;
        default:
            throw Error("apply: derivative order must be 1 or 2, got " +
                        std::to_string(deriv_order));
    }
}

}  // namespace slcheb
