#include "slcheb/grid.hpp"

#include <cmath>

namespace slcheb {

Domain::Domain(double a, double b) : a(a), b(b) {
    if (!std::isfinite(a) || !std::isfinite(b))
        throw Error("domain endpoints must be finite");
    if (!(a < b))
        throw Error("domain requires a < b, got [" + std::to_string(a) + ", " +
                    std::to_string(b) + "]");
}

std::vector<double> cheb_points(int n) {
    if (n < 1)
        throw Error("cheb_points: grid order must be >= 1, got " + std::to_string(n));
    std::vector<double> x(n + 1);
    // cos(j pi / N) = sin(pi (N - 2j) / (2N)); evaluating the sin form for
    // j <= N/2 and mirroring keeps x_j = -x_{N-j} bitwise.
    for (int j = 0; 2 * j < n; ++j) {
        x[j] = std::sin(M_PI * (n - 2 * j) / (2.0 * n));
        x[n - j] = -x[j];
    }
    if (n % 2 == 0) x[n / 2] = 0.0;
    return x;
}

std::vector<double> clenshaw_curtis_weights(int n) {
    if (n < 1)
        throw Error("clenshaw_curtis_weights: grid order must be >= 1, got " +
                    std::to_string(n));
    std::vector<double> w(n + 1);
    const bool even = (n % 2 == 0);
    w[0] = w[n] = even ? 1.0 / (static_cast<double>(n) * n - 1.0)
                       : 1.0 / (static_cast<double>(n) * n);
    // Explicit O(N^2) cosine sum; no FFT by design.
    for (int k = 1; k < n; ++k) {
        const double theta = k * M_PI / n;
        double v = 1.0;
        for (int j = 1; j <= (n - 1) / 2; ++j)
            v -= 2.0 * std::cos(2.0 * j * theta) / (4.0 * j * j - 1.0);
        if (even) v -= std::cos(n * theta) / (static_cast<double>(n) * n - 1.0);
        w[k] = 2.0 * v / n;
    }
    return w;
}

ChebGrid make_grid(int n, const Domain& domain) {
    ChebGrid grid{n, cheb_points(n), {}, {}, clenshaw_curtis_weights(n), domain};
    grid.mapped_nodes.resize(n + 1);
    grid.bary_weights.resize(n + 1);
    const double half_length = domain.length() / 2.0;
    for (int j = 0; j <= n; ++j) {
        grid.mapped_nodes[j] = domain.map_from_canonical(grid.nodes[j]);
        grid.bary_weights[j] = (j % 2 == 0) ? 1.0 : -1.0;
        grid.quad_weights[j] *= half_length;
    }
    grid.bary_weights[0] *= 0.5;
    grid.bary_weights[n] *= 0.5;
    return grid;
}

}  // namespace slcheb
