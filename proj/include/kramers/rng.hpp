#pragma once

#include <cmath>
#include <cstdint>

namespace kramers {

/// SplitMix64 (Vigna's fixed-increment variant of SplittableRandom).
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
};

/// Seed of the per-path substream: the idx-th output of SplitMix64 seeded with
/// the master seed. Counter-based (random access), so path i's stream does not
/// depend on how many other paths ran or on which thread it runs.
inline std::uint64_t stream_seed(std::uint64_t master, std::uint64_t idx) {
    SplitMix64 g(master + idx * 0x9e3779b97f4a7c15ull);
    return g.next();
}

/// Deterministic Gaussian stream (SplitMix64 + Box-Muller).
class GaussianStream {
  public:
    GaussianStream(std::uint64_t master, std::uint64_t path_index)
        : gen_(stream_seed(master, path_index)) {}

    /// Uniform on (0, 1].
    double uniform01() { return static_cast<double>((gen_.next() >> 11) + 1) * 0x1.0p-53; }

    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(t);
        have_spare_ = true;
        return r * std::cos(t);
    }

  private:
    SplitMix64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace kramers
