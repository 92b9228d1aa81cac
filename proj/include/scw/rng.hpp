#pragma once

#include <cstdint>

namespace scw {

/// Counter-based random generator. Every draw is a pure function of
/// (seed, stream, counter), so concurrent sweeps that partition the counter
/// space reproduce the exact same numbers regardless of evaluation order.

std::uint64_t mix_bits(std::uint64_t z);

/// Uniform draw in (0, 1].
double uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

/// Standard normal draw (Box-Muller over two uniform cells).
double gaussian(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter);

/// Uniform integer in [0, n).
std::uint32_t uniform_below(std::uint64_t seed, std::uint64_t stream,
                            std::uint64_t counter, std::uint32_t n);

} // namespace scw
