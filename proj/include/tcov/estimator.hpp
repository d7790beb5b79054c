#pragma once

#include <cstdint>

#include "tcov/lattice.hpp"
#include "tcov/localfn.hpp"
#include "tcov/matrix.hpp"

namespace tcov {

/// (n-1)^-1 sum of centered outer products. Requires n >= 2.
CovMatrix sample_covariance(const DataMatrix& data);

/// Entry (i,j) of S scaled by h(delta_ij / k_h), component-wise division.
/// Deltas are taken in the embedding lattice; for an irregular spec, row r of
/// S corresponds to the r-th active site. Weights are cached per delta class,
/// so h is evaluated at most once per distinct coordinate difference.
CovMatrix localize(const CovMatrix& s, const LatticeSpec& spec, const LocalizationFunction& h,
                   const ScalingVector& k_h);

/// Hard truncation: entry kept iff delta_l < k_l for every l (strict zone).
CovMatrix multi_band(const CovMatrix& s, const LatticeSpec& spec, const ScalingVector& k);

/// Entry kept iff |i-j| <= k. Requires 0 <= k < p.
CovMatrix band_1d(const CovMatrix& s, int k);

/// Entry scaled by the linear taper with full weight up to k/2 and support k.
/// Requires k >= 2 and even.
CovMatrix taper_1d(const CovMatrix& s, int k);

struct KroneckerResult {
    CovMatrix factor1;  // p1 x p1, trace normalized to p1
    CovMatrix factor2;  // p2 x p2
    double residual = 0.0;  // Frobenius distance of factor2 (x) factor1 from the input
    int iterations = 0;
};

/// Nearest Kronecker product: minimizes the Frobenius distance between the
/// input (p1*p2 square) and factor2 (x) factor1, via the block rearrangement
/// and its dominant singular pair (alternating power iteration). Throws on
/// non-convergence, reporting the last residual.
KroneckerResult nearest_kronecker(const CovMatrix& s, std::int64_t p1, std::int64_t p2,
                                  int iters = 1000, double tol = 1e-13);

/// a (x) b with the usual block layout (a scales blocks of size b).
CovMatrix kronecker_product(const CovMatrix& a, const CovMatrix& b);

/// Eigenvalues clamped to max(lambda, floor); Frobenius-nearest PSD matrix
/// for floor = 0. Idempotent up to rounding.
CovMatrix psd_project(const CovMatrix& m, double floor = 0.0);

/// Inverse via Cholesky. Errors if the smallest eigenvalue is below
/// min_eig_guard instead of silently regularizing.
CovMatrix precision(const CovMatrix& m, double min_eig_guard = 0.0);

}  // namespace tcov
