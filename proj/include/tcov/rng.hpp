#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

namespace tcov {

// Deterministic xoshiro256++ stream. States are derived from a user seed plus
// an arbitrary list of stream ids (replicate index, purpose tag, ...) so that
// replicates and sub-draws never share state. Output is identical across
// platforms and runs for the same (seed, ids).
class Rng {
public:
    explicit Rng(std::uint64_t seed) { init(seed); }

    Rng(std::uint64_t seed, std::initializer_list<std::uint64_t> ids) {
        std::uint64_t x = seed;
        for (std::uint64_t id : ids) x = splitmix(x ^ (id + 0x9e3779b97f4a7c15ULL));
        init(x);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform on (0,1]; never returns 0 so log() is safe
    double next_unit() {
        return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53;
    }

    // uniform on [lo, hi)
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(next_u64() >> 11) * 0x1.0p-53);
    }

    // standard normal via Box-Muller; second value of each pair is cached
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = next_unit();
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    double chi_squared(int dof) {
        double s = 0.0;
        for (int i = 0; i < dof; ++i) {
            const double z = normal();
            s += z * z;
        }
        return s;
    }

    // uniform integer in [0, n) without modulo bias
    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    // k distinct indices from [0, n), in draw order (partial Fisher-Yates)
    std::vector<std::int64_t> sample_without_replacement(std::int64_t n, std::int64_t k) {
        std::vector<std::int64_t> pool(static_cast<std::size_t>(n));
        for (std::int64_t i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
        std::vector<std::int64_t> out;
        out.reserve(static_cast<std::size_t>(k));
        for (std::int64_t i = 0; i < k; ++i) {
            const auto j = i + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(n - i)));
            std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
            out.push_back(pool[static_cast<std::size_t>(i)]);
        }
        return out;
    }

    static std::uint64_t splitmix(std::uint64_t x) {
        x += 0x9e3779b97f4a7c15ULL;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
        return x ^ (x >> 31);
    }

private:
    void init(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& s : s_) {
            x = splitmix(x);
            s = x;
        }
        // xoshiro must not start from the all-zero state
        if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 0x9e3779b97f4a7c15ULL;
    }

    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4]{};
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace tcov
