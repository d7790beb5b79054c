#pragma once

#include <span>

#include "tcov/matrix.hpp"

namespace tcov {

struct SpectralResult {
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Largest absolute eigenvalue of a symmetric matrix via shifted power
/// iteration (two positive-definite shifts, one per spectrum end). Start
/// vectors are seeded deterministically; stagnating runs are restarted from a
/// fresh deterministic vector. On non-convergence the best estimate is
/// returned with converged = false.
SpectralResult spectral_norm(const CovMatrix& m, double tol = 1e-10, int max_iter = 20000);

/// sqrt of the compensated sum of squared entries.
double frobenius_norm(const CovMatrix& m);

/// Operator 1-norm: maximum absolute column sum.
double l1_operator_norm(const CovMatrix& m);

/// Entrywise L1 (sum of absolute entries); sensitivity alternative.
double l1_entrywise(const CovMatrix& m);

/// Fraction of positions where sign(x_i) != sign(y_i); sign(0) = 0.
double sign_hamming(std::span<const double> x, std::span<const double> y);

struct ErrorReport {
    double spectral = 0.0;
    double frobenius = 0.0;
    double l1_operator = 0.0;
    bool spectral_converged = true;
};

/// All three reconstruction-error metrics of (a - b) at once.
ErrorReport error_report(const CovMatrix& a, const CovMatrix& b);

}  // namespace tcov
