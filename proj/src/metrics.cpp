#include "tcov/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "tcov/linalg.hpp"
#include "tcov/rng.hpp"

namespace tcov {

namespace {

// Extreme eigenvalue of the PSD matrix A = shift*I + sgn*M by power iteration.
// Returns the Rayleigh quotient; residual-based stopping keeps the absolute
// eigenvalue error below tol*scale.
struct PowerResult {
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

PowerResult shifted_power(const CovMatrix& m, double shift, double sgn, double scale,
                          double tol, int max_iter) {
    const std::int64_t p = m.dim();
    PowerResult out;

    std::vector<double> v(static_cast<std::size_t>(p));
    std::vector<double> av(static_cast<std::size_t>(p));

    const int restarts = 3;
    double best_residual = std::numeric_limits<double>::infinity();
    int used = 0;
    for (int attempt = 0; attempt < restarts && used < max_iter; ++attempt) {
        Rng rng(0x5ca1ab1eULL, {static_cast<std::uint64_t>(attempt)});
        double norm = 0.0;
        for (auto& x : v) {
            x = rng.uniform(-1.0, 1.0);
            norm += x * x;
        }
        norm = std::sqrt(norm);
        for (auto& x : v) x /= norm;

        double prev_residual = std::numeric_limits<double>::infinity();
        int stall = 0;
        while (used < max_iter) {
            ++used;
            symv(m.data(), p, v.data(), av.data());
            double rho = shift;  // Rayleigh quotient of shift*I + sgn*M at unit v
            for (std::int64_t i = 0; i < p; ++i) rho += sgn * v[static_cast<std::size_t>(i)] * av[static_cast<std::size_t>(i)];

            double res = 0.0;
            double next_norm = 0.0;
            for (std::int64_t i = 0; i < p; ++i) {
                const auto ii = static_cast<std::size_t>(i);
                const double avi = shift * v[ii] + sgn * av[ii];
                const double r = avi - rho * v[ii];
                res += r * r;
                next_norm += avi * avi;
                av[ii] = avi;
            }
            res = std::sqrt(res);
            if (res < best_residual) {
                best_residual = res;
                out.value = rho;
            }
            if (res <= tol * scale) {
                out.converged = true;
                out.iterations = used;
                return out;
            }
            next_norm = std::sqrt(next_norm);
            if (next_norm == 0.0) {  // v is in the kernel: rho = shift exactly
                out.converged = true;
                out.iterations = used;
                out.value = shift;
                return out;
            }
            for (std::int64_t i = 0; i < p; ++i) v[static_cast<std::size_t>(i)] = av[static_cast<std::size_t>(i)] / next_norm;

            // restart from a fresh vector only on genuine stagnation; slow
            // steady convergence must be left alone
            if (res > 0.99995 * prev_residual) {
                if (++stall >= 200) break;
            } else {
                stall = 0;
            }
            prev_residual = res;
        }
    }
    out.iterations = used;
    return out;
}

}  // namespace

SpectralResult spectral_norm(const CovMatrix& m, double tol, int max_iter) {
    const std::int64_t p = m.dim();

    // Gershgorin bound: every eigenvalue lies in [-g, g]
    double g = 0.0;
    for (std::int64_t i = 0; i < p; ++i) {
        double row = 0.0;
        for (double x : m.row(i)) row += std::fabs(x);
        g = std::max(g, row);
    }
    SpectralResult out;
    if (g == 0.0) {
        out.converged = true;
        return out;
    }

    // lambda_max(M) = top(gI + M) - g, lambda_min(M) = g - top(gI - M)
    const PowerResult hi = shifted_power(m, g, +1.0, 2.0 * g, tol, max_iter);
    const PowerResult lo = shifted_power(m, g, -1.0, 2.0 * g, tol, max_iter);
    const double lambda_max = hi.value - g;
    const double lambda_min = g - lo.value;
    out.value = std::max(std::fabs(lambda_max), std::fabs(lambda_min));
    out.iterations = hi.iterations + lo.iterations;
    out.converged = hi.converged && lo.converged;
    return out;
}

double frobenius_norm(const CovMatrix& m) {
    double sum = 0.0;
    double comp = 0.0;
    for (double x : m.values()) {
        const double term = x * x - comp;
        const double next = sum + term;
        comp = (next - sum) - term;
        sum = next;
    }
    return std::sqrt(sum);
}

double l1_operator_norm(const CovMatrix& m) {
    const std::int64_t p = m.dim();
    std::vector<double> col(static_cast<std::size_t>(p), 0.0);
    for (std::int64_t i = 0; i < p; ++i) {
        const auto row = m.row(i);
        for (std::int64_t j = 0; j < p; ++j) col[static_cast<std::size_t>(j)] += std::fabs(row[static_cast<std::size_t>(j)]);
    }
    double best = 0.0;
    for (double c : col) best = std::max(best, c);
    return best;
}

double l1_entrywise(const CovMatrix& m) {
    double sum = 0.0;
    for (double x : m.values()) sum += std::fabs(x);
    return sum;
}

double sign_hamming(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("sign_hamming: length mismatch");
    if (x.empty()) return 0.0;
    auto sgn = [](double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); };
    std::size_t miss = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (sgn(x[i]) != sgn(y[i])) ++miss;
    return static_cast<double>(miss) / static_cast<double>(x.size());
}

ErrorReport error_report(const CovMatrix& a, const CovMatrix& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("error_report: dimension mismatch");
    CovMatrix diff(a.dim());
    for (std::size_t i = 0; i < a.values().size(); ++i) diff.values()[i] = a.values()[i] - b.values()[i];
    ErrorReport r;
    const SpectralResult s = spectral_norm(diff);
    r.spectral = s.value;
    r.spectral_converged = s.converged;
    r.frobenius = frobenius_norm(diff);
    r.l1_operator = l1_operator_norm(diff);
    return r;
}

}  // namespace tcov
