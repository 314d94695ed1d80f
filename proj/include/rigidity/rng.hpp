#pragma once

#include <cstdint>
#include <initializer_list>

namespace rigidity {

// Counter-based keyed generator: every output is a pure function of the key
// tuple, so sampling is deterministic and independent of evaluation order or
// thread scheduling.
namespace rng {

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t keyed(std::uint64_t seed, std::initializer_list<std::uint64_t> parts) {
    std::uint64_t h = splitmix64(seed);
    for (std::uint64_t p : parts) h = splitmix64(h ^ (p + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
    return h;
}

// Stream tags keep independent uses of the same seed from colliding.
enum Stream : std::uint64_t {
    kCoordinates = 1,
    kStressCoefficients = 2,
    kGadgets = 3,
    kTestData = 4,
};

}  // namespace rng

}  // namespace rigidity
