#ifndef HETM_DET_RNG_HPP
#define HETM_DET_RNG_HPP

#include <cstdint>

namespace hetm {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// xoshiro-free deterministic generator. std::mt19937_64 is portable too, but
/// the standard distributions are not; this keeps every sampled value
/// identical across standard libraries so that seeded reports stay
/// byte-for-byte reproducible.
class DetRng {
public:
    explicit DetRng(std::uint64_t seed = 1) : state_(seed ? seed : 0x853c49e6748fea9bULL) {}

    std::uint64_t next() {
        state_ = splitmix64(state_);
        return state_;
    }

    /// Uniform in [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound) {
        // Lemire's multiply-shift; bias negligible at these bounds.
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    /// Uniform double in [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool chance(double p) { return uniform() < p; }

private:
    std::uint64_t state_;
};

}  // namespace hetm

#endif
