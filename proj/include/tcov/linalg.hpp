#pragma once

#include <cstdint>
#include <vector>

#include "tcov/matrix.hpp"

namespace tcov {

struct EighResult {
    std::vector<double> eigenvalues;   // ascending
    std::vector<double> eigenvectors;  // p x p row-major, column j = j-th eigenvector
};

/// Full symmetric eigendecomposition (LAPACK dsyevd). Throws on failure.
EighResult eigh(const CovMatrix& m);

double min_eigenvalue(const CovMatrix& m);

/// Lower Cholesky factor L with A = L L^T, row-major with zeroed upper part.
/// Throws std::runtime_error if A is not positive definite.
std::vector<double> cholesky_lower(const CovMatrix& a);

/// Solves A x = b for SPD A via Cholesky; b may hold several right-hand
/// sides (row-major n x nrhs). Throws if A is not positive definite.
std::vector<double> cholesky_solve(const CovMatrix& a, std::vector<double> b, std::int64_t nrhs);

/// SPD inverse via Cholesky (dpotrf + dpotri), symmetrized.
CovMatrix cholesky_inverse(const CovMatrix& a);

/// C = X^T X for row-major X (n x p), returned as p x p row-major (full).
std::vector<double> gram(const double* x, std::int64_t n, std::int64_t p);

/// y = M v for row-major square M.
void symv(const double* m, std::int64_t p, const double* v, double* y);

}  // namespace tcov
