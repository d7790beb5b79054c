#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace tcov {

/// d-order lattice {1..p_1} x ... x {1..p_d}, vectorized with dimension 1
/// varying fastest. Linear indices are 0-based, coordinates 1-based; these
/// conversions are the only place that mapping lives. An optional sorted
/// `active` subset marks the occupied sites of an irregular lattice embedded
/// in the regular one.
struct LatticeSpec {
    std::vector<int> dims;
    std::vector<std::int64_t> active;  // empty = full lattice

    explicit LatticeSpec(std::vector<int> dims_, std::vector<std::int64_t> active_ = {});

    int order() const { return static_cast<int>(dims.size()); }
    std::int64_t full_size() const { return full_size_; }
    bool irregular() const { return !active.empty(); }

    /// Number of occupied sites: active.size() if irregular, else prod(dims).
    std::int64_t site_count() const {
        return irregular() ? static_cast<std::int64_t>(active.size()) : full_size_;
    }

    /// Linear index in the embedding lattice of the r-th occupied site.
    std::int64_t site_index(std::int64_t r) const;

private:
    std::int64_t full_size_ = 0;
};

using Coord = std::vector<int>;  // 1-based, one entry per lattice direction

/// Component-wise absolute coordinate difference between two sites.
struct CoordDelta {
    std::vector<int> delta;

    int order() const { return static_cast<int>(delta.size()); }
    bool operator==(const CoordDelta&) const = default;
};

/// Per-dimension window sizes k, 1 <= k_l <= p_l.
struct ScalingVector {
    std::vector<int> k;

    ScalingVector() = default;
    explicit ScalingVector(std::vector<int> k_);

    int order() const { return static_cast<int>(k.size()); }
    std::int64_t volume() const;  // prod(k_l), overflow-checked
    bool operator==(const ScalingVector&) const = default;
};

Coord index_to_coord(std::int64_t i, const LatticeSpec& spec);
std::int64_t coord_to_index(const Coord& c, const LatticeSpec& spec);

/// delta(i, j) on the embedding lattice; symmetric, delta(i,i) = 0.
CoordDelta delta(std::int64_t i, std::int64_t j, const LatticeSpec& spec);

/// Non-strict: d_l <= k_l for all l. Strict: d_l < k_l for all l.
bool in_kzone(const CoordDelta& d, const ScalingVector& k, bool strict);
bool in_kzone(std::span<const int> d, std::span<const int> k, bool strict);

/// Smallest regular lattice containing the given sites, with its active set.
/// Rejects duplicates, empty input and mixed arities.
LatticeSpec embed_irregular(const std::vector<Coord>& sites);

}  // namespace tcov
