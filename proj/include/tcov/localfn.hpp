#pragma once

#include <functional>
#include <span>
#include <vector>

#include "tcov/lattice.hpp"

namespace tcov {

/// Piecewise-quintic Gaspari-Cohn correlation function on [0, inf);
/// GC(0) = 1, GC(z) = 0 for z >= 2.
double gaspari_cohn(double z);

/// Linear taper segment on [0,1]: 1 for z <= c, (1-z)/(1-c) on (c,1], 0 past 1.
double taper_segment(double z, double c);

/// One-dimensional weight profile: 1 at 0, non-increasing, 0 for z >= 1.
/// Either tabulated on a uniform grid over [0,1] (linearly interpolated) or
/// closed-form.
class Profile {
public:
    static Profile tabulated(std::vector<double> values);
    static Profile closed_form(std::function<double(double)> fn);

    double operator()(double z) const;
    bool is_tabulated() const { return !table_.empty(); }
    const std::vector<double>& table() const { return table_; }

private:
    Profile() = default;
    std::vector<double> table_;
    std::function<double(double)> fn_;
};

enum class LocalKind {
    MultiplicativeBanding,
    MultiplicativeTapering,
    GaspariCohnL2,
    ProductOfProfiles,
};

/// Weight surface h on [0,1]^d: h(0) = 1, marginally non-increasing,
/// vanishing outside the unit box (Gaspari-Cohn: outside the unit L2 ball).
/// Immutable after construction; evaluation is pure and reentrant.
class LocalizationFunction {
public:
    static LocalizationFunction banding(int arity);
    static LocalizationFunction tapering(std::vector<double> plateau);  // each c_l in (0,1)
    static LocalizationFunction gaspari_cohn_l2(int arity);
    /// Custom product form; each profile is validated on 1000 sample points
    /// (h(0)=1, non-increasing, within [0,1], tolerance 1e-9).
    static LocalizationFunction product_of_profiles(std::vector<Profile> profiles);

    LocalKind kind() const { return kind_; }
    int arity() const { return arity_; }

    /// Plateau constants c: eval is exactly 1 on {z : z_l <= 0.999 c_l}.
    /// Empty for the Gaspari-Cohn kind, which has no exact plateau.
    const std::vector<double>& plateau() const { return plateau_; }

    double eval(std::span<const double> z) const;

private:
    LocalizationFunction(LocalKind k, int arity) : kind_(k), arity_(arity) {}

    LocalKind kind_;
    int arity_;
    std::vector<double> plateau_;
    std::vector<Profile> profiles_;
};

/// Alternating corner sum of h over the box [a,b] in [0,1]^d, with degenerate
/// directions (a_l = b_l) contributing a single corner.
double qvol(const LocalizationFunction& h, std::span<const double> a, std::span<const double> b);

/// Grid lower bound for the Vitali variation: sum of |qvol| over the cells of
/// the uniform N^d partition of [0,1]^d. Non-decreasing under refinement.
double vitali_variation(const LocalizationFunction& h, int resolution);

/// Multi-banding weights w(k) for k in the integer box [1, k_h], pruned at
/// |w| < 1e-15. Satisfies, for every integer delta in [0, k_h]:
///   sum over {k : delta < k component-wise} of w(k)  ==  h(delta / k_h).
struct WeightMap {
    ScalingVector base;
    std::vector<std::pair<ScalingVector, double>> entries;
};

WeightMap weight_decomposition(const LocalizationFunction& h, const ScalingVector& k_h);

}  // namespace tcov
