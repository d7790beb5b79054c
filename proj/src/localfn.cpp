#include "tcov/localfn.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace tcov {

double gaspari_cohn(double z) {
    if (z < 0.0) throw std::invalid_argument("gaspari_cohn: negative argument");
    if (z >= 2.0) return 0.0;
    if (z <= 1.0) {
        return 1.0 + z * z * (-5.0 / 3.0 + z * (5.0 / 8.0 + z * (0.5 - 0.25 * z)));
    }
    return -2.0 / (3.0 * z) + 4.0 + z * (-5.0 + z * (5.0 / 3.0 + z * (5.0 / 8.0 + z * (-0.5 + z / 12.0))));
}

double taper_segment(double z, double c) {
    if (z <= c) return 1.0;
    if (z >= 1.0) return 0.0;
    return (1.0 - z) / (1.0 - c);
}

Profile Profile::tabulated(std::vector<double> values) {
    if (values.size() < 2) throw std::invalid_argument("Profile: table needs at least 2 points");
    Profile p;
    p.table_ = std::move(values);
    return p;
}

Profile Profile::closed_form(std::function<double(double)> fn) {
    if (!fn) throw std::invalid_argument("Profile: empty function");
    Profile p;
    p.fn_ = std::move(fn);
    return p;
}

double Profile::operator()(double z) const {
    if (z >= 1.0) return 0.0;
    if (!table_.empty()) {
        const double pos = z * static_cast<double>(table_.size() - 1);
        const auto lo = static_cast<std::size_t>(pos);
        if (lo + 1 >= table_.size()) return table_.back();
        const double t = pos - static_cast<double>(lo);
        return table_[lo] * (1.0 - t) + table_[lo + 1] * t;
    }
    return fn_(z);
}

LocalizationFunction LocalizationFunction::banding(int arity) {
    if (arity < 1) throw std::invalid_argument("banding: arity must be >= 1");
    LocalizationFunction h(LocalKind::MultiplicativeBanding, arity);
    h.plateau_.assign(static_cast<std::size_t>(arity), 1.0);
    return h;
}

LocalizationFunction LocalizationFunction::tapering(std::vector<double> plateau) {
    if (plateau.empty()) throw std::invalid_argument("tapering: empty plateau vector");
    for (double c : plateau)
        if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("tapering: plateau constants must lie in (0,1)");
    LocalizationFunction h(LocalKind::MultiplicativeTapering, static_cast<int>(plateau.size()));
    h.plateau_ = std::move(plateau);
    return h;
}

LocalizationFunction LocalizationFunction::gaspari_cohn_l2(int arity) {
    if (arity < 1) throw std::invalid_argument("gaspari_cohn_l2: arity must be >= 1");
    return LocalizationFunction(LocalKind::GaspariCohnL2, arity);
}

LocalizationFunction LocalizationFunction::product_of_profiles(std::vector<Profile> profiles) {
    if (profiles.empty()) throw std::invalid_argument("product_of_profiles: no profiles");
    constexpr int kSamples = 1000;
    constexpr double kTol = 1e-9;
    std::vector<double> plateau;
    for (const Profile& f : profiles) {
        if (std::fabs(f(0.0) - 1.0) > kTol)
            throw std::invalid_argument("product_of_profiles: profile must equal 1 at 0");
        double prev = f(0.0);
        double c = 0.0;
        for (int s = 1; s <= kSamples; ++s) {
            const double z = static_cast<double>(s) / kSamples;
            const double v = f(z);
            if (v > prev + kTol)
                throw std::invalid_argument("product_of_profiles: profile must be non-increasing");
            if (v < -kTol || v > 1.0 + kTol)
                throw std::invalid_argument("product_of_profiles: profile must take values in [0,1]");
            if (std::fabs(v - 1.0) <= kTol && z < 1.0) c = z;
            prev = v;
        }
        plateau.push_back(c);
    }
    LocalizationFunction h(LocalKind::ProductOfProfiles, static_cast<int>(profiles.size()));
    h.profiles_ = std::move(profiles);
    h.plateau_ = std::move(plateau);
    return h;
}

double LocalizationFunction::eval(std::span<const double> z) const {
    if (static_cast<int>(z.size()) != arity_)
        throw std::invalid_argument("LocalizationFunction::eval: arity mismatch");
    for (double x : z)
        if (!(x >= 0.0)) throw std::invalid_argument("LocalizationFunction::eval: negative component");

    switch (kind_) {
        case LocalKind::MultiplicativeBanding:
            for (double x : z)
                if (x >= 1.0) return 0.0;
            return 1.0;
        case LocalKind::MultiplicativeTapering: {
            double w = 1.0;
            for (std::size_t l = 0; l < z.size(); ++l) {
                w *= taper_segment(z[l], plateau_[l]);
                if (w == 0.0) return 0.0;
            }
            return w;
        }
        case LocalKind::GaspariCohnL2: {
            double s = 0.0;
            for (double x : z) s += x * x;
            return gaspari_cohn(2.0 * std::sqrt(s));
        }
        case LocalKind::ProductOfProfiles: {
            double w = 1.0;
            for (std::size_t l = 0; l < z.size(); ++l) {
                w *= profiles_[l](z[l]);
                if (w == 0.0) return 0.0;
            }
            return w;
        }
    }
    return 0.0;
}

double qvol(const LocalizationFunction& h, std::span<const double> a, std::span<const double> b) {
    const int d = h.arity();
    if (static_cast<int>(a.size()) != d || static_cast<int>(b.size()) != d)
        throw std::invalid_argument("qvol: arity mismatch");
    for (int l = 0; l < d; ++l)
        if (a[l] > b[l]) throw std::invalid_argument("qvol: box must satisfy a <= b");

    std::vector<int> vary;
    for (int l = 0; l < d; ++l)
        if (a[l] != b[l]) vary.push_back(l);

    std::vector<double> corner(b.begin(), b.end());
    double sum = 0.0;
    const std::uint32_t combos = 1u << vary.size();
    for (std::uint32_t bits = 0; bits < combos; ++bits) {
        int sign = 1;
        for (std::size_t t = 0; t < vary.size(); ++t) {
            const bool low = (bits >> t) & 1u;
            corner[static_cast<std::size_t>(vary[t])] = low ? a[vary[t]] : b[vary[t]];
            if (low) sign = -sign;
        }
        sum += sign * h.eval(corner);
    }
    return sum;
}

namespace {

// Evaluates h on the (n_0+1) x ... x (n_{d-1}+1) grid with node l,i at
// scale[l]*i, so box sums can reuse corner values.
std::vector<double> grid_values(const LocalizationFunction& h, const std::vector<int>& nodes,
                                const std::vector<double>& scale) {
    const int d = h.arity();
    std::int64_t total = 1;
    for (int n : nodes) {
        if (__builtin_mul_overflow(total, static_cast<std::int64_t>(n) + 1, &total) || total > (1 << 27))
            throw std::invalid_argument("localfn: grid too large");
    }
    std::vector<double> vals(static_cast<std::size_t>(total));
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    std::vector<double> z(static_cast<std::size_t>(d), 0.0);
    for (std::int64_t f = 0; f < total; ++f) {
        for (int l = 0; l < d; ++l) z[static_cast<std::size_t>(l)] = scale[l] * idx[static_cast<std::size_t>(l)];
        vals[static_cast<std::size_t>(f)] = h.eval(z);
        for (int l = 0; l < d; ++l) {
            if (++idx[static_cast<std::size_t>(l)] <= nodes[static_cast<std::size_t>(l)]) break;
            idx[static_cast<std::size_t>(l)] = 0;
        }
    }
    return vals;
}

}  // namespace

double vitali_variation(const LocalizationFunction& h, int resolution) {
    if (resolution < 2) throw std::invalid_argument("vitali_variation: resolution must be >= 2");
    const int d = h.arity();
    const std::vector<int> nodes(static_cast<std::size_t>(d), resolution);
    const std::vector<double> scale(static_cast<std::size_t>(d), 1.0 / resolution);
    const std::vector<double> vals = grid_values(h, nodes, scale);

    std::vector<std::int64_t> stride(static_cast<std::size_t>(d), 1);
    for (int l = 1; l < d; ++l)
        stride[static_cast<std::size_t>(l)] = stride[static_cast<std::size_t>(l - 1)] * (resolution + 1);

    std::int64_t cells = 1;
    for (int l = 0; l < d; ++l) cells *= resolution;

    double total = 0.0;
    std::vector<int> cell(static_cast<std::size_t>(d), 0);
    for (std::int64_t c = 0; c < cells; ++c) {
        std::int64_t base = 0;
        for (int l = 0; l < d; ++l) base += stride[static_cast<std::size_t>(l)] * cell[static_cast<std::size_t>(l)];
        double q = 0.0;
        for (std::uint32_t bits = 0; bits < (1u << d); ++bits) {
            std::int64_t at = base;
            int sign = 1;
            for (int l = 0; l < d; ++l) {
                if ((bits >> l) & 1u) {
                    at += stride[static_cast<std::size_t>(l)];
                } else {
                    sign = -sign;  // lower corner in direction l flips the sign
                }
            }
            q += sign * vals[static_cast<std::size_t>(at)];
        }
        total += std::fabs(q);
        for (int l = 0; l < d; ++l) {
            if (++cell[static_cast<std::size_t>(l)] < resolution) break;
            cell[static_cast<std::size_t>(l)] = 0;
        }
    }
    return total;
}

WeightMap weight_decomposition(const LocalizationFunction& h, const ScalingVector& k_h) {
    const int d = h.arity();
    if (k_h.order() != d) throw std::invalid_argument("weight_decomposition: arity mismatch");

    // cache h((k)/k_h) for k in the integer box [0, k_h]
    std::vector<int> nodes(k_h.k.begin(), k_h.k.end());
    std::vector<double> scale(static_cast<std::size_t>(d));
    for (int l = 0; l < d; ++l) scale[static_cast<std::size_t>(l)] = 1.0 / k_h.k[static_cast<std::size_t>(l)];
    const std::vector<double> vals = grid_values(h, nodes, scale);

    std::vector<std::int64_t> stride(static_cast<std::size_t>(d), 1);
    for (int l = 1; l < d; ++l)
        stride[static_cast<std::size_t>(l)] = stride[static_cast<std::size_t>(l - 1)] * (k_h.k[static_cast<std::size_t>(l - 1)] + 1);

    WeightMap wm;
    wm.base = k_h;
    const std::int64_t count = k_h.volume();
    std::vector<int> k(static_cast<std::size_t>(d), 1);
    for (std::int64_t c = 0; c < count; ++c) {
        // w(k) = sum over corners u in {0,1}^d of (-1)^|u| h((k - 1 + u)/k_h)
        std::int64_t base = 0;
        for (int l = 0; l < d; ++l)
            base += stride[static_cast<std::size_t>(l)] * (k[static_cast<std::size_t>(l)] - 1);
        double w = 0.0;
        for (std::uint32_t bits = 0; bits < (1u << d); ++bits) {
            std::int64_t at = base;
            int sign = 1;
            for (int l = 0; l < d; ++l) {
                if ((bits >> l) & 1u) {
                    at += stride[static_cast<std::size_t>(l)];
                    sign = -sign;
                }
            }
            w += sign * vals[static_cast<std::size_t>(at)];
        }
        if (std::fabs(w) >= 1e-15) wm.entries.emplace_back(ScalingVector(k), w);
        for (int l = 0; l < d; ++l) {
            if (++k[static_cast<std::size_t>(l)] <= k_h.k[static_cast<std::size_t>(l)]) break;
            k[static_cast<std::size_t>(l)] = 1;
        }
    }
    return wm;
}

}  // namespace tcov
