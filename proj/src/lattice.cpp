#include "tcov/lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tcov {

namespace {

std::int64_t checked_product(const std::vector<int>& v, const char* what) {
    std::int64_t prod = 1;
    for (int x : v) {
        if (x < 1) throw std::invalid_argument(std::string(what) + ": entries must be positive");
        if (__builtin_mul_overflow(prod, static_cast<std::int64_t>(x), &prod))
            throw std::overflow_error(std::string(what) + ": product overflows");
    }
    return prod;
}

}  // namespace

LatticeSpec::LatticeSpec(std::vector<int> dims_, std::vector<std::int64_t> active_)
    : dims(std::move(dims_)), active(std::move(active_)) {
    if (dims.empty()) throw std::invalid_argument("LatticeSpec: dims must be non-empty");
    full_size_ = checked_product(dims, "LatticeSpec dims");
    if (!active.empty()) {
        std::int64_t prev = -1;
        for (std::int64_t a : active) {
            if (a <= prev) throw std::invalid_argument("LatticeSpec: active set must be strictly increasing");
            if (a < 0 || a >= full_size_) throw std::out_of_range("LatticeSpec: active index out of range");
            prev = a;
        }
    }
}

std::int64_t LatticeSpec::site_index(std::int64_t r) const {
    if (r < 0 || r >= site_count()) throw std::out_of_range("LatticeSpec::site_index: out of range");
    return irregular() ? active[static_cast<std::size_t>(r)] : r;
}

ScalingVector::ScalingVector(std::vector<int> k_) : k(std::move(k_)) {
    if (k.empty()) throw std::invalid_argument("ScalingVector: empty");
    for (int x : k)
        if (x < 1) throw std::invalid_argument("ScalingVector: entries must be >= 1");
}

std::int64_t ScalingVector::volume() const {
    return checked_product(k, "ScalingVector");
}

Coord index_to_coord(std::int64_t i, const LatticeSpec& spec) {
    if (i < 0 || i >= spec.full_size()) throw std::out_of_range("index_to_coord: index out of range");
    Coord c(spec.dims.size());
    for (std::size_t l = 0; l < spec.dims.size(); ++l) {
        const std::int64_t p = spec.dims[l];
        c[l] = static_cast<int>(i % p) + 1;
        i /= p;
    }
    return c;
}

std::int64_t coord_to_index(const Coord& c, const LatticeSpec& spec) {
    if (c.size() != spec.dims.size()) throw std::invalid_argument("coord_to_index: arity mismatch");
    std::int64_t i = 0;
    std::int64_t stride = 1;
    for (std::size_t l = 0; l < c.size(); ++l) {
        if (c[l] < 1 || c[l] > spec.dims[l]) throw std::out_of_range("coord_to_index: coordinate out of range");
        i += stride * (c[l] - 1);
        stride *= spec.dims[l];
    }
    return i;
}

CoordDelta delta(std::int64_t i, std::int64_t j, const LatticeSpec& spec) {
    if (i < 0 || i >= spec.full_size() || j < 0 || j >= spec.full_size())
        throw std::out_of_range("delta: index out of range");
    CoordDelta d;
    d.delta.resize(spec.dims.size());
    for (std::size_t l = 0; l < spec.dims.size(); ++l) {
        const std::int64_t p = spec.dims[l];
        const int a = static_cast<int>(i % p);
        const int b = static_cast<int>(j % p);
        d.delta[l] = a > b ? a - b : b - a;
        i /= p;
        j /= p;
    }
    return d;
}

bool in_kzone(std::span<const int> d, std::span<const int> k, bool strict) {
    if (d.size() != k.size()) throw std::invalid_argument("in_kzone: arity mismatch");
    for (std::size_t l = 0; l < d.size(); ++l) {
        if (strict ? d[l] >= k[l] : d[l] > k[l]) return false;
    }
    return true;
}

bool in_kzone(const CoordDelta& d, const ScalingVector& k, bool strict) {
    return in_kzone(std::span<const int>(d.delta), std::span<const int>(k.k), strict);
}

LatticeSpec embed_irregular(const std::vector<Coord>& sites) {
    if (sites.empty()) throw std::invalid_argument("embed_irregular: no sites");
    const std::size_t d = sites.front().size();
    if (d == 0) throw std::invalid_argument("embed_irregular: zero-arity site");
    std::vector<int> dims(d, 1);
    for (const Coord& s : sites) {
        if (s.size() != d) throw std::invalid_argument("embed_irregular: mixed arities");
        for (std::size_t l = 0; l < d; ++l) {
            if (s[l] < 1) throw std::invalid_argument("embed_irregular: coordinates must be positive");
            dims[l] = std::max(dims[l], s[l]);
        }
    }
    LatticeSpec full(dims);
    std::vector<std::int64_t> active;
    active.reserve(sites.size());
    for (const Coord& s : sites) active.push_back(coord_to_index(s, full));
    std::sort(active.begin(), active.end());
    if (std::adjacent_find(active.begin(), active.end()) != active.end())
        throw std::invalid_argument("embed_irregular: duplicate site");
    return LatticeSpec(std::move(dims), std::move(active));
}

}  // namespace tcov
