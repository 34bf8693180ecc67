#pragma once

#include <cmath>
#include <cstdint>

namespace sadi {

namespace detail {
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}
}  // namespace detail

/// Counter-based pseudo-random stream (splitmix64 core). Every draw is a pure
/// function of (seed, counter), so streams are reproducible across platforms
/// and cheap to fork. Distribution sampling is pinned here rather than taken
/// from <random> so that identical seeds give identical trajectories under
/// any standard library.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed) : state_(seed) {}

    /// Independent stream for unit `index` under a master experiment seed.
    static RngStream derived(std::uint64_t master_seed, std::uint64_t index) {
        return RngStream(detail::mix64(master_seed ^ detail::mix64(index + 0x9E3779B97F4A7C15ULL)));
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return detail::mix64(state_);
    }

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1]; safe under log().
    double uniform_pos() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

    /// Standard normal via Box-Muller (two uniforms per draw, no cached spare).
    double normal() {
        const double u1 = uniform_pos();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    bool bernoulli(double p) { return uniform() < p; }

    /// Poisson by inverse-product search. Exact for the small rates used by
    /// the queue models; cost grows linearly with lambda.
    long poisson(double lambda) {
        const double limit = std::exp(-lambda);
        long k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= uniform();
        } while (p > limit);
        return k - 1;
    }

private:
    std::uint64_t state_;
};

/// Seed for trajectory `index` within the experiment identified by `master_seed`.
inline std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t index) {
    return detail::mix64(master_seed ^ detail::mix64(index + 0x9E3779B97F4A7C15ULL));
}

}  // namespace sadi
