#ifndef CORPUSCOPE_RNG_HPP
#define CORPUSCOPE_RNG_HPP

#include <cstdint>
#include <random>

namespace corpuscope {

/// SplitMix64 step, used to derive independent stream seeds from a master
/// seed. The constants are the reference ones from Steele et al.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Deterministic per-stream seed: same (base, salt) pair on any platform
/// yields the same seed.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t salt) {
    return splitmix64(base ^ splitmix64(salt));
}

/// Thin wrapper around std::mt19937_64 that avoids the distribution classes;
/// their output is implementation-defined, the raw engine is not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, n). Lemire's multiply-shift; slightly biased
    /// for astronomically large n, unbiased in practice for our ranges.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(gen_()) * n) >> 64);
    }

private:
    std::mt19937_64 gen_;
};

}  // namespace corpuscope

#endif
