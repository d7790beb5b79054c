#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tcov {

/// Dense symmetric p x p matrix of doubles, row-major. Exact symmetry is
/// enforced on construction: from_data() symmetrizes by averaging, and at()
/// writes both mirror entries.
class CovMatrix {
public:
    CovMatrix() = default;
    explicit CovMatrix(std::int64_t p);  // zeros

    static CovMatrix identity(std::int64_t p);
    /// Takes p*p row-major values, symmetrizes, rejects non-finite entries.
    static CovMatrix from_data(std::int64_t p, std::vector<double> values);

    std::int64_t dim() const { return p_; }

    double operator()(std::int64_t i, std::int64_t j) const { return v_[i * p_ + j]; }
    void set(std::int64_t i, std::int64_t j, double x) {
        v_[i * p_ + j] = x;
        v_[j * p_ + i] = x;
    }

    std::span<const double> values() const { return v_; }
    std::span<double> values() { return v_; }
    const double* data() const { return v_.data(); }
    double* data() { return v_.data(); }

    std::span<const double> row(std::int64_t i) const {
        return {v_.data() + i * p_, static_cast<std::size_t>(p_)};
    }

    bool operator==(const CovMatrix&) const = default;

private:
    std::int64_t p_ = 0;
    std::vector<double> v_;
};

/// n observation rows of length p, row-major.
class DataMatrix {
public:
    DataMatrix() = default;
    DataMatrix(std::int64_t n, std::int64_t p);  // zeros
    static DataMatrix from_rows(std::int64_t n, std::int64_t p, std::vector<double> values);

    std::int64_t n() const { return n_; }
    std::int64_t p() const { return p_; }

    double operator()(std::int64_t i, std::int64_t j) const { return v_[i * p_ + j]; }
    double& operator()(std::int64_t i, std::int64_t j) { return v_[i * p_ + j]; }

    std::span<const double> row(std::int64_t i) const {
        return {v_.data() + i * p_, static_cast<std::size_t>(p_)};
    }
    std::span<double> row(std::int64_t i) {
        return {v_.data() + i * p_, static_cast<std::size_t>(p_)};
    }

    const double* data() const { return v_.data(); }
    double* data() { return v_.data(); }

    bool operator==(const DataMatrix&) const = default;

private:
    std::int64_t n_ = 0;
    std::int64_t p_ = 0;
    std::vector<double> v_;
};

}  // namespace tcov
