#include "slcheb/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <Eigen/Eigenvalues>

namespace slcheb {

namespace {

constexpr double kRealnessBound = 1e-8;   // |Im| <= bound * (1 + |Re|)
constexpr double kResidualBound = 1e-6;   // ||Av - lam Bv|| <= bound * (1 + |lam|) ||v||

// Parlett-Reinsch balancing (scaling pass only; the matrices here are dense
// and irreducible). Scales are powers of two, so the similarity transform is
// exact in floating point. Returns the diagonal D with M <- D^-1 M D.
Eigen::VectorXd balance_in_place(Eigen::MatrixXd& m) {
    const int n = static_cast<int>(m.rows());
    Eigen::VectorXd d = Eigen::VectorXd::Ones(n);
    const double radix = 2.0;
    const double radix2 = radix * radix;
    bool converged = false;
    while (!converged) {
        converged = true;
        for (int i = 0; i < n; ++i) {
            double col_norm = 0.0;
            double row_norm = 0.0;
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                col_norm += std::abs(m(j, i));
                row_norm += std::abs(m(i, j));
            }
            if (col_norm == 0.0 || row_norm == 0.0) continue;
            const double sum = col_norm + row_norm;
            double factor = 1.0;
            double g = row_norm / radix;
            while (col_norm < g) {
                factor *= radix;
                col_norm *= radix2;
            }
            g = row_norm * radix;
            while (col_norm > g) {
                factor /= radix;
                col_norm /= radix2;
            }
            if ((col_norm + row_norm) / factor < 0.95 * sum) {
                converged = false;
                d(i) *= factor;
                m.row(i) /= factor;
                m.col(i) *= factor;
            }
        }
    }
    return d;
}

// Two-sided Rayleigh quotient w^T M v / (w^T v) with extended-precision
// accumulation; quadratically accurate near a simple eigenpair.
double rayleigh_quotient(const Eigen::MatrixXd& m, const Eigen::VectorXd& w,
                         const Eigen::VectorXd& v) {
    const Eigen::VectorXd mv = m * v;
    long double num = 0.0L;
    long double den = 0.0L;
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        num += static_cast<long double>(w(i)) * mv(i);
        den += static_cast<long double>(w(i)) * v(i);
    }
    return static_cast<double>(num / den);
}

}  // namespace

std::size_t Spectrum::converged_count() const {
    return static_cast<std::size_t>(std::count(converged.begin(), converged.end(), true));
}

double residual(const DiscreteEVP& evp, double lambda, const Eigen::VectorXd& v) {
    const double norm = v.norm();
    if (norm == 0.0) throw Error("residual: eigenvector is zero");
    if (v.size() != evp.a_mat.rows())
        throw Error("residual: vector length " + std::to_string(v.size()) +
                    " does not match system size " + std::to_string(evp.a_mat.rows()));
    return (evp.a_mat * v - lambda * evp.b_diag.cwiseProduct(v)).norm() / norm;
}

Spectrum solve(const DiscreteEVP& evp) {
    const int m = static_cast<int>(evp.a_mat.rows());
    Eigen::MatrixXd scaled(m, m);
    for (int i = 0; i < m; ++i) scaled.row(i) = evp.a_mat.row(i) / evp.b_diag(i);
    const Eigen::VectorXd d = balance_in_place(scaled);

    Eigen::EigenSolver<Eigen::MatrixXd> solver(scaled, true);
    if (solver.info() != Eigen::Success)
        throw Error("eigensolver did not converge at N=" + std::to_string(evp.grid.order));

    const auto& values = solver.eigenvalues();
    const auto& vectors = solver.eigenvectors();

    // Left eigenvectors (of the transpose) drive a guarded two-sided
    // Rayleigh-quotient polish of the retained eigenvalues.
    Eigen::EigenSolver<Eigen::MatrixXd> left(scaled.transpose(), true);
    std::vector<std::pair<double, int>> left_real;
    if (left.info() == Eigen::Success) {
        for (int k = 0; k < m; ++k) {
            const double re = left.eigenvalues()(k).real();
            const double im = left.eigenvalues()(k).imag();
            if (std::abs(im) <= kRealnessBound * (1.0 + std::abs(re)))
                left_real.emplace_back(re, k);
        }
        std::sort(left_real.begin(), left_real.end());
    }

    struct Pair {
        double lambda;
        double res;
        Eigen::VectorXd v;
    };
    std::vector<Pair> kept;
    kept.reserve(m);
    for (int k = 0; k < m; ++k) {
        const double re = values(k).real();
        const double im = values(k).imag();
        if (std::abs(im) > kRealnessBound * (1.0 + std::abs(re))) continue;
        const Eigen::VectorXd vb = vectors.col(k).real();
        double lambda = re;

        // polish with the nearest real left eigenpair when it is trustworthy
        if (!left_real.empty()) {
            auto it = std::lower_bound(left_real.begin(), left_real.end(),
                                       std::make_pair(re, -1));
            if (it == left_real.end() ||
                (it != left_real.begin() &&
                 re - std::prev(it)->first < it->first - re))
                --it;
            const Eigen::VectorXd wb = left.eigenvectors().col(it->second).real();
            const double alignment = std::abs(wb.dot(vb)) / (wb.norm() * vb.norm());
            if (std::abs(it->first - re) <= 1e-6 * (1.0 + std::abs(re)) &&
                alignment > 1e-6) {
                const double polished = rayleigh_quotient(scaled, wb, vb);
                if (std::abs(polished - re) <= 1e-6 * (1.0 + std::abs(re)))
                    lambda = polished;
            }
        }

        // undo the balancing similarity, then drop the (tiny) imaginary part
        Eigen::VectorXd v = d.cwiseProduct(vb);
        const double norm = v.norm();
        if (norm == 0.0) continue;
        v /= norm;
        const double res = residual(evp, lambda, v);
        if (res > kResidualBound * (1.0 + std::abs(lambda))) continue;
        kept.push_back(Pair{lambda, res, std::move(v)});
    }
    if (kept.empty())
        throw Error("no real eigenvalues retained at N=" + std::to_string(evp.grid.order));

    std::sort(kept.begin(), kept.end(), [](const Pair& a, const Pair& b) {
        if (a.lambda != b.lambda) return a.lambda < b.lambda;
        return a.res < b.res;
    });
    // a conjugate pair inside the realness bound yields a bitwise-duplicate
    // real part; keep the smaller-residual copy
    std::vector<const Pair*> unique;
    unique.reserve(kept.size());
    for (const Pair& p : kept)
        if (unique.empty() || unique.back()->lambda != p.lambda) unique.push_back(&p);

    Spectrum spectrum;
    spectrum.n_grid = evp.grid.order;
    spectrum.eigenvalues.reserve(unique.size());
    spectrum.residuals.reserve(unique.size());
    spectrum.eigenvectors.resize(m, static_cast<int>(unique.size()));
    for (std::size_t k = 0; k < unique.size(); ++k) {
        spectrum.eigenvalues.push_back(unique[k]->lambda);
        spectrum.residuals.push_back(unique[k]->res);
        spectrum.eigenvectors.col(static_cast<int>(k)) = unique[k]->v;
    }
    spectrum.converged.assign(unique.size(), false);
    return spectrum;
}

Spectrum mark_converged(const Spectrum& coarse, Spectrum fine, double tol) {
    if (!(tol > 0.0)) throw Error("certify: tolerance must be > 0");
    const std::size_t matched = std::min(coarse.size(), fine.size());
    fine.converged.assign(fine.size(), false);
    for (std::size_t k = 0; k < matched; ++k) {
        const double diff = std::abs(coarse.eigenvalues[k] - fine.eigenvalues[k]);
        fine.converged[k] = diff <= tol * (1.0 + std::abs(fine.eigenvalues[k]));
    }
    return fine;
}

Spectrum certify(const SLProblem& prob, int n, double tol) {
    if (n < 8) throw Error("certify: grid order must be >= 8, got " + std::to_string(n));
    Spectrum coarse = solve(assemble(prob, n));
    Spectrum fine = solve(assemble(prob, 2 * n));
    return mark_converged(coarse, std::move(fine), tol);
}

}  // namespace slcheb
