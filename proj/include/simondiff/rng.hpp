#ifndef SIMONDIFF_RNG_HPP
#define SIMONDIFF_RNG_HPP

#include <cstdint>
#include <limits>
#include <random>

namespace simondiff {

// Uniform integer in [0, bound) by rejection sampling. std::uniform_int_distribution
// is implementation-defined, which would break byte-identical reruns across toolchains.
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t v;
    do {
        v = gen();
    } while (v >= limit);
    return v % bound;
}

inline std::uint32_t random_word(std::mt19937_64& gen, unsigned word_size) {
    return static_cast<std::uint32_t>(gen() & ((std::uint64_t{1} << word_size) - 1));
}

// splitmix64 finalizer; used to spread (seed, index) into independent stream seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Stream seed for the index-th work item of a batch. Batches over many
// differentials derive one stream per item so results do not depend on
// scheduling order or worker count.
inline std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
}

} // namespace simondiff

#endif
