#include "tcov/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace tcov {

CovMatrix::CovMatrix(std::int64_t p) : p_(p) {
    if (p < 1) throw std::invalid_argument("CovMatrix: dimension must be positive");
    v_.assign(static_cast<std::size_t>(p) * static_cast<std::size_t>(p), 0.0);
}

CovMatrix CovMatrix::identity(std::int64_t p) {
    CovMatrix m(p);
    for (std::int64_t i = 0; i < p; ++i) m.v_[i * p + i] = 1.0;
    return m;
}

CovMatrix CovMatrix::from_data(std::int64_t p, std::vector<double> values) {
    if (p < 1) throw std::invalid_argument("CovMatrix: dimension must be positive");
    if (values.size() != static_cast<std::size_t>(p) * static_cast<std::size_t>(p))
        throw std::invalid_argument("CovMatrix: value count does not match dimension");
    for (double x : values)
        if (!std::isfinite(x)) throw std::invalid_argument("CovMatrix: non-finite entry");
    CovMatrix m;
    m.p_ = p;
    m.v_ = std::move(values);
    for (std::int64_t i = 0; i < p; ++i) {
        for (std::int64_t j = 0; j < i; ++j) {
            const double s = 0.5 * (m.v_[i * p + j] + m.v_[j * p + i]);
            m.v_[i * p + j] = s;
            m.v_[j * p + i] = s;
        }
    }
    return m;
}

DataMatrix::DataMatrix(std::int64_t n, std::int64_t p) : n_(n), p_(p) {
    if (n < 0 || p < 1) throw std::invalid_argument("DataMatrix: bad shape");
    v_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(p), 0.0);
}

DataMatrix DataMatrix::from_rows(std::int64_t n, std::int64_t p, std::vector<double> values) {
    if (n < 0 || p < 1) throw std::invalid_argument("DataMatrix: bad shape");
    if (values.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(p))
        throw std::invalid_argument("DataMatrix: value count does not match shape");
    for (double x : values)
        if (!std::isfinite(x)) throw std::invalid_argument("DataMatrix: non-finite entry");
    DataMatrix m;
    m.n_ = n;
    m.p_ = p;
    m.v_ = std::move(values);
    return m;
}

}  // namespace tcov
