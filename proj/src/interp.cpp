#include "slcheb/interp.hpp"

#include <cmath>

#include "slcheb/diffmat.hpp"

namespace slcheb {

std::vector<double> reattach_boundary(const Eigen::VectorXd& v, const DiscreteEVP& evp) {
    const int m = static_cast<int>(evp.a_mat.rows());
    if (v.size() != m)
        throw Error("reattach_boundary: vector length " + std::to_string(v.size()) +
                    " does not match reduced dimension " + std::to_string(m));
    const int n = evp.grid.order;
    std::vector<double> values(n + 1, 0.0);
    values[0] = evp.right_endpoint_relation.dot(v);
    values[n] = evp.left_endpoint_relation.dot(v);
    for (int k = 0; k < m; ++k) values[evp.interior_index_map[k]] = v(k);
    return values;
}

double bary_eval(const Eigenfunction& f, double x) {
    const auto& grid = f.grid;
    if (x < grid.domain.a || x > grid.domain.b)
        throw Error("bary_eval: x = " + std::to_string(x) + " outside [" +
                    std::to_string(grid.domain.a) + ", " + std::to_string(grid.domain.b) +
                    "]");
    const int n = grid.order;
    double numerator = 0.0;
    double denominator = 0.0;
    for (int j = 0; j <= n; ++j) {
        const double dx = x - grid.mapped_nodes[j];
        if (dx == 0.0) return f.node_values[j];
        const double q = grid.bary_weights[j] / dx;
        numerator += q * f.node_values[j];
        denominator += q;
    }
    return numerator / denominator;
}

Eigenfunction normalize(const Eigenfunction& f, const Expr& w) {
    const int n = f.grid.order;
    double norm2 = 0.0;
    for (int j = 0; j <= n; ++j) {
        const double wj = w.eval(f.grid.mapped_nodes[j]);
        norm2 += f.grid.quad_weights[j] * wj * f.node_values[j] * f.node_values[j];
    }
    if (!(norm2 > 0.0)) throw Error("normalize: zero function");
    double scale = 1.0 / std::sqrt(norm2);

    // Sign convention: derivative at the left endpoint (node N in descending
    // order) positive; tie broken by the first nonzero node value.
    const DiffMatrices dm = cheb_diff_matrix(f.grid);
    double left_slope = 0.0;
    for (int j = 0; j <= n; ++j) left_slope += dm.d1(n, j) * f.node_values[j];
    if (left_slope < 0.0) {
        scale = -scale;
    } else if (left_slope == 0.0) {
        for (int j = 0; j <= n; ++j) {
            if (f.node_values[j] != 0.0) {
                if (f.node_values[j] < 0.0) scale = -scale;
                break;
            }
        }
    }

    Eigenfunction out = f;
    for (double& value : out.node_values) value *= scale;
    return out;
}

std::vector<std::pair<double, double>> sample(const Eigenfunction& f, int m) {
    if (m < 2) throw Error("sample: need at least 2 sample points");
    std::vector<std::pair<double, double>> points;
    points.reserve(m);
    const double a = f.grid.domain.a;
    const double b = f.grid.domain.b;
    for (int i = 0; i < m; ++i) {
        const double x = (i == m - 1) ? b : a + (b - a) * i / (m - 1);
        points.emplace_back(x, bary_eval(f, x));
    }
    return points;
}

}  // namespace slcheb
