#include "tcov/linalg.hpp"

#include <cblas.h>
#include <lapacke.h>

#include <stdexcept>
#include <string>

namespace tcov {

EighResult eigh(const CovMatrix& m) {
    const auto p = static_cast<lapack_int>(m.dim());
    EighResult r;
    r.eigenvalues.resize(static_cast<std::size_t>(p));
    r.eigenvectors.assign(m.values().begin(), m.values().end());
    const lapack_int info = LAPACKE_dsyevd(LAPACK_ROW_MAJOR, 'V', 'L', p,
                                           r.eigenvectors.data(), p, r.eigenvalues.data());
    if (info != 0)
        throw std::runtime_error("eigh: dsyevd failed to converge (info=" + std::to_string(info) + ")");
    return r;
}

double min_eigenvalue(const CovMatrix& m) {
    const auto p = static_cast<lapack_int>(m.dim());
    std::vector<double> a(m.values().begin(), m.values().end());
    std::vector<double> w(static_cast<std::size_t>(p));
    const lapack_int info = LAPACKE_dsyevd(LAPACK_ROW_MAJOR, 'N', 'L', p, a.data(), p, w.data());
    if (info != 0)
        throw std::runtime_error("min_eigenvalue: dsyevd failed (info=" + std::to_string(info) + ")");
    return w.front();
}

std::vector<double> cholesky_lower(const CovMatrix& a) {
    const auto p = static_cast<lapack_int>(a.dim());
    std::vector<double> l(a.values().begin(), a.values().end());
    const lapack_int info = LAPACKE_dpotrf(LAPACK_ROW_MAJOR, 'L', p, l.data(), p);
    if (info != 0)
        throw std::runtime_error("cholesky_lower: matrix not positive definite (info=" +
                                 std::to_string(info) + ")");
    for (std::int64_t i = 0; i < p; ++i)
        for (std::int64_t j = i + 1; j < p; ++j) l[i * p + j] = 0.0;
    return l;
}

std::vector<double> cholesky_solve(const CovMatrix& a, std::vector<double> b, std::int64_t nrhs) {
    const auto p = static_cast<lapack_int>(a.dim());
    if (b.size() != static_cast<std::size_t>(p) * static_cast<std::size_t>(nrhs))
        throw std::invalid_argument("cholesky_solve: rhs shape mismatch");
    std::vector<double> f(a.values().begin(), a.values().end());
    lapack_int info = LAPACKE_dpotrf(LAPACK_ROW_MAJOR, 'L', p, f.data(), p);
    if (info != 0)
        throw std::runtime_error("cholesky_solve: matrix not positive definite (info=" +
                                 std::to_string(info) + ")");
    info = LAPACKE_dpotrs(LAPACK_ROW_MAJOR, 'L', p, static_cast<lapack_int>(nrhs),
                          f.data(), p, b.data(), static_cast<lapack_int>(nrhs));
    if (info != 0) throw std::runtime_error("cholesky_solve: dpotrs failed");
    return b;
}

CovMatrix cholesky_inverse(const CovMatrix& a) {
    const auto p = static_cast<lapack_int>(a.dim());
    std::vector<double> f(a.values().begin(), a.values().end());
    lapack_int info = LAPACKE_dpotrf(LAPACK_ROW_MAJOR, 'L', p, f.data(), p);
    if (info != 0)
        throw std::runtime_error("cholesky_inverse: matrix not positive definite (info=" +
                                 std::to_string(info) + ")");
    info = LAPACKE_dpotri(LAPACK_ROW_MAJOR, 'L', p, f.data(), p);
    if (info != 0) throw std::runtime_error("cholesky_inverse: dpotri failed");
    // dpotri fills the lower triangle only
    for (std::int64_t i = 0; i < p; ++i)
        for (std::int64_t j = i + 1; j < p; ++j) f[i * p + j] = f[j * p + i];
    return CovMatrix::from_data(p, std::move(f));
}

std::vector<double> gram(const double* x, std::int64_t n, std::int64_t p) {
    std::vector<double> c(static_cast<std::size_t>(p) * static_cast<std::size_t>(p), 0.0);
    if (n > 0) {
        cblas_dsyrk(CblasRowMajor, CblasLower, CblasTrans, static_cast<int>(p), static_cast<int>(n),
                    1.0, x, static_cast<int>(p), 0.0, c.data(), static_cast<int>(p));
        for (std::int64_t i = 0; i < p; ++i)
            for (std::int64_t j = i + 1; j < p; ++j) c[i * p + j] = c[j * p + i];
    }
    return c;
}

void symv(const double* m, std::int64_t p, const double* v, double* y) {
    cblas_dgemv(CblasRowMajor, CblasNoTrans, static_cast<int>(p), static_cast<int>(p),
                1.0, m, static_cast<int>(p), v, 1, 0.0, y, 1);
}

}  // namespace tcov
