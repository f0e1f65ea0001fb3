#ifndef QREPNET_RNG_HPP
#define QREPNET_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace qrepnet {

// splitmix64 finalizer. Stateless, so independent per-cell streams can be
// derived from one root seed plus grid coordinates.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t a, std::uint64_t b = 0,
                                 std::uint64_t c = 0) {
    std::uint64_t s = mix_seed(root ^ 0xa0761d6478bd642fULL);
    s = mix_seed(s ^ a);
    s = mix_seed(s ^ b);
    return mix_seed(s ^ c);
}

// Uniform in [0, 1) with 53 bits; avoids std::uniform_real_distribution so
// the stream is identical across standard library implementations.
inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline double exponential(std::mt19937_64& rng, double rate) {
    return -std::log1p(-uniform01(rng)) / rate;
}

}  // namespace qrepnet

#endif
