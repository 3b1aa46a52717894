#pragma once

// Deterministic counter-based random stream. Word k of the stream seeded by s
// is the splitmix64 finalizer applied to s + (k+1) * 0x9E3779B97F4A7C15. The
// mapping is part of the report/golden-file contract: identical (seed, counter)
// always yields identical words, independent of call order or sharding.

#include <cstdint>

namespace dtc {

inline std::uint64_t stream_word(std::uint64_t seed, std::uint64_t counter) {
    std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Uniform-ish draw in [0, m); the modulo bias is irrelevant at these sizes
/// and keeps the stream contract simple.
inline unsigned stream_mod(std::uint64_t seed, std::uint64_t counter, unsigned m) {
    return unsigned(stream_word(seed, counter) % m);
}

} // namespace dtc
