#ifndef PWT_RNG_HPP
#define PWT_RNG_HPP

#include <cstdint>
#include <random>

namespace pwt {

// Seedable random stream with platform-independent draws.
//
// std::mt19937_64 output is pinned by the standard, but the standard
// distributions are not, so bounded integers and unit doubles are derived
// here by hand. Parallel work splits streams by index via mix_seed, which
// keeps results independent of scheduling.
class Rng {
 public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // Uniform double in [0, 1), 53 random bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n), unbiased via rejection. n must be > 0.
    std::uint64_t next_below(std::uint64_t n) {
        const std::uint64_t limit = n * (UINT64_MAX / n);
        std::uint64_t x = next_u64();
        while (x >= limit) x = next_u64();
        return x % n;
    }

 private:
    std::mt19937_64 gen_;
};

// splitmix64 finalizer; used to derive independent child seeds.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace pwt

#endif  // PWT_RNG_HPP
