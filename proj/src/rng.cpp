#include "scw/rng.hpp"

#include <cmath>
#include <numbers>

namespace scw {

std::uint64_t mix_bits(std::uint64_t z) {
    // splitmix64 finalizer
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

std::uint64_t cell(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    std::uint64_t h = mix_bits(seed ^ 0x6a09e667f3bcc909ULL);
    h = mix_bits(h ^ stream);
    h = mix_bits(h ^ counter);
    return h;
}

} // namespace

double uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    // map the top 53 bits to (0, 1]
    return static_cast<double>((cell(seed, stream, counter) >> 11) + 1) * 0x1.0p-53;
}

double gaussian(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
    const double u1 = uniform01(seed, stream, 2 * counter);
    const double u2 = uniform01(seed, stream, 2 * counter + 1);
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint32_t uniform_below(std::uint64_t seed, std::uint64_t stream,
                            std::uint64_t counter, std::uint32_t n) {
    const std::uint64_t h = cell(seed, stream, counter);
    return static_cast<std::uint32_t>((static_cast<unsigned __int128>(h) * n) >> 64);
}

} // namespace scw
