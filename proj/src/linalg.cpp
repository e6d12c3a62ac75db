#include "ggen/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ggen/rng.hpp"

namespace ggen {

std::vector<double> sym_eigenvalues(std::vector<double> a, std::size_t n) {
    if (a.size() != n * n)
        throw std::invalid_argument("matrix size mismatch");
    if (n == 0)
        return {};

    auto at = [&](std::size_t r, std::size_t c) -> double& { return a[r * n + c]; };

    double frob = 0;
    for (double v : a)
        frob += v * v;
    const double stop = 1e-26 * std::max(frob, 1e-300);

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        double off = 0;
        for (std::size_t p = 0; p < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                off += at(p, q) * at(p, q);
        if (off <= stop)
            break;

        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (std::abs(apq) < 1e-300)
                    continue;
                const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                const double app = at(p, p);
                const double aqq = at(q, q);
                at(p, p) = c * c * app - 2.0 * s * c * apq + s * s * aqq;
                at(q, q) = s * s * app + 2.0 * s * c * apq + c * c * aqq;
                at(p, q) = 0.0;
                at(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q)
                        continue;
                    const double akp = at(k, p);
                    const double akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(p, k) = at(k, p);
                    at(k, q) = s * akp + c * akq;
                    at(q, k) = at(k, q);
                }
            }
        }
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i)
        eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

namespace {

// Number of eigenvalues of the tridiagonal (diag, sub) strictly below x,
// by the Sturm / LDL^T sign count.
int sturm_count(const std::vector<double>& diag, const std::vector<double>& sub, double x) {
    int count = 0;
    double q = diag[0] - x;
    if (q < 0)
        ++count;
    for (std::size_t i = 1; i < diag.size(); ++i) {
        const double denom = (q == 0.0) ? 1e-300 : q;
        q = diag[i] - x - sub[i] * sub[i] / denom;
        if (q < 0)
            ++count;
    }
    return count;
}

double tridiag_extreme(const std::vector<double>& diag, const std::vector<double>& sub,
                       bool largest) {
    const std::size_t k = diag.size();
    double lo = diag[0], hi = diag[0];
    for (std::size_t i = 0; i < k; ++i) {
        const double r = (i > 0 ? std::abs(sub[i]) : 0.0) +
                         (i + 1 < k ? std::abs(sub[i + 1]) : 0.0);
        lo = std::min(lo, diag[i] - r);
        hi = std::max(hi, diag[i] + r);
    }
    // find x with count(<x) = k (largest) or = 1 (smallest)
    const int want = largest ? static_cast<int>(k) : 1;
    for (int iter = 0; iter < 200 && hi - lo > 1e-15 * std::max(1.0, std::abs(hi) + std::abs(lo));
         ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (sturm_count(diag, sub, mid) >= want)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

double ritz_value(const std::vector<double>& diag, const std::vector<double>& sub,
                  WhichExtreme which) {
    switch (which) {
    case WhichExtreme::largest_algebraic:
        return tridiag_extreme(diag, sub, true);
    case WhichExtreme::smallest_algebraic:
        return tridiag_extreme(diag, sub, false);
    case WhichExtreme::largest_magnitude: {
        const double hi = tridiag_extreme(diag, sub, true);
        const double lo = tridiag_extreme(diag, sub, false);
        return std::abs(hi) >= std::abs(lo) ? hi : lo;
    }
    }
    return 0;
}

} // namespace

LanczosResult lanczos_extreme(const LinearOperator& apply, std::size_t dim, WhichExtreme which,
                              const LanczosOptions& opts) {
    LanczosResult res;
    if (dim == 0)
        throw std::invalid_argument("operator dimension must be positive");
    if (dim == 1) {
        std::vector<double> e1{1.0}, y(1);
        apply(e1, y);
        res.eigenvalue = which == WhichExtreme::largest_magnitude ? y[0] : y[0];
        res.iterations = 1;
        res.converged = true;
        return res;
    }

    Rng rng(opts.seed);
    std::vector<std::vector<double>> basis;
    std::vector<double> v(dim), w(dim);
    for (double& x : v)
        x = rng.next_unit() - 0.5;
    if (opts.project)
        opts.project(v);

    auto normalize = [](std::vector<double>& u) {
        double norm = 0;
        for (double x : u)
            norm += x * x;
        norm = std::sqrt(norm);
        if (norm > 0)
            for (double& x : u)
                x /= norm;
        return norm;
    };
    normalize(v);

    std::vector<double> diag, sub; // sub[i] couples step i-1 and i
    sub.push_back(0.0);
    double prev_theta = 0;
    int stable = 0;
    const int max_steps = static_cast<int>(std::min<std::size_t>(dim, opts.max_iterations));

    for (int j = 0; j < max_steps; ++j) {
        basis.push_back(v);
        apply(v, w);
        double alpha = 0;
        for (std::size_t i = 0; i < dim; ++i)
            alpha += v[i] * w[i];
        diag.push_back(alpha);

        // two passes of classical Gram-Schmidt against the whole basis
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& b : basis) {
                double proj = 0;
                for (std::size_t i = 0; i < dim; ++i)
                    proj += b[i] * w[i];
                for (std::size_t i = 0; i < dim; ++i)
                    w[i] -= proj * b[i];
            }
        }
        if (opts.project)
            opts.project(w);

        const double theta = ritz_value(diag, sub, which);
        if (j > 0) {
            if (std::abs(theta - prev_theta) <=
                opts.tolerance * std::max(1.0, std::abs(theta)))
                ++stable;
            else
                stable = 0;
        }
        prev_theta = theta;
        res.iterations = j + 1;
        res.eigenvalue = theta;
        if (stable >= 3) {
            res.converged = true;
            return res;
        }

        double beta = 0;
        for (double x : w)
            beta += x * x;
        beta = std::sqrt(beta);
        if (beta < 1e-12) { // Krylov space exhausted
            res.converged = true;
            return res;
        }
        sub.push_back(beta);
        for (std::size_t i = 0; i < dim; ++i)
            v[i] = w[i] / beta;
    }

    // ran the full space: the tridiagonal spectrum is the operator's
    res.converged = static_cast<std::size_t>(res.iterations) >= dim;
    return res;
}

} // namespace ggen
