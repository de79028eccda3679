#include "slcheb/reference.hpp"

#include <cmath>

#include "slcheb/grid.hpp"

namespace slcheb {

double gamma_fn(double x) {
    // Lanczos approximation, g = 7, 9 coefficients (Godfrey's table).
    static const double coef[9] = {
        0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,   12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};
    if (x < 0.5) return M_PI / (std::sin(M_PI * x) * gamma_fn(1.0 - x));
    x -= 1.0;
    double a = coef[0];
    const double t = x + 7.5;
    for (int i = 1; i < 9; ++i) a += coef[i] / (x + i);
    return std::sqrt(2.0 * M_PI) * std::pow(t, x + 0.5) * std::exp(-t) * a;
}

double wkb_general(const Expr& w, const Domain& domain, int n) {
    if (n < 1) throw Error("wkb_general: mode index must be >= 1");
    // sqrt(w) is smooth and positive for the problems treated here; a fixed
    // order-200 Clenshaw-Curtis rule delivers 12+ digits.
    const ChebGrid grid = make_grid(200, domain);
    double integral = 0.0;
    for (int j = 0; j <= grid.order; ++j) {
        const double wj = w.eval(grid.mapped_nodes[j]);
        if (wj < 0.0)
            throw Error("wkb_general: weight is negative at x = " +
                        std::to_string(grid.mapped_nodes[j]));
        integral += grid.quad_weights[j] * std::sqrt(wj);
    }
    const double k = n * M_PI / integral;
    return k * k;
}

double wkb_example1(int n) {
    if (n < 1) throw Error("wkb_example1: mode index must be >= 1");
    const double pi2 = M_PI * M_PI;
    return 9.0 * static_cast<double>(n) * n / (49.0 * pi2 * pi2);
}

double wkb_example2(int n) {
    if (n < 0) throw Error("wkb_example2: mode index must be >= 0");
    const double base =
        3.0 * gamma_fn(0.75) * (n + 0.5) * std::sqrt(M_PI) / gamma_fn(0.25);
    return std::pow(base, 4.0 / 3.0);
}

double exact_example3(int n) {
    if (n < 1) throw Error("exact_example3: mode index must be >= 1");
    const double k = M_PI * n / std::log(2.0);
    return 0.25 + k * k;
}

double exact_eigenfunction_example3(int n, double x) {
    if (x < 0.0 || x > 1.0)
        throw Error("exact_eigenfunction_example3: x must lie in [0, 1]");
    return std::sqrt(1.0 + x) * std::sin(M_PI * n * std::log1p(x) / std::log(2.0));
}

double wkb_eigenfunction_example1(int n, double x) {
    if (x < 0.0 || x > M_PI)
        throw Error("wkb_eigenfunction_example1: x must lie in [0, pi]");
    const double pi2 = M_PI * M_PI;
    const double amplitude = std::sqrt(6.0 / (7.0 * M_PI * pi2));
    const double phase = n * (x * x * x + 3.0 * x * x * M_PI + 3.0 * pi2 * x) / (7.0 * pi2);
    return amplitude * std::sin(phase) / (M_PI + x);
}

double relative_error(double exact, double computed) {
    if (exact == 0.0) throw Error("relative_error: reference value is zero");
    return std::abs(exact - computed) / std::abs(exact);
}

}  // namespace slcheb
