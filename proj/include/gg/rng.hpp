#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace gg {

// splitmix64 step; the whole project uses this counter-based generator so
// that sample i is a pure function of (seed, i) and batches can be split
// across threads without changing the stream.
inline std::uint64_t splitmix64(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL + index * 0xd1b54a32d192ed03ULL);
    splitmix64(s);
    return s;
}

// Uniform in (0, 1].
inline double uniform01(std::uint64_t& s) {
    return ((splitmix64(s) >> 11) + 1.0) * 0x1.0p-53;
}

// Four independent standard normals for (seed, index), via Box-Muller.
inline std::array<double, 4> normal4(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = mix_seed(seed, index);
    std::array<double, 4> z{};
    for (int k = 0; k < 2; ++k) {
        double u1 = uniform01(s), u2 = uniform01(s);
        double r = std::sqrt(-2.0 * std::log(u1));
        z[2 * k] = r * std::cos(2.0 * M_PI * u2);
        z[2 * k + 1] = r * std::sin(2.0 * M_PI * u2);
    }
    return z;
}

inline std::array<double, 3> normal3(std::uint64_t seed, std::uint64_t index) {
    auto z = normal4(seed, index);
    return {z[0], z[1], z[2]};
}

}  // namespace gg
