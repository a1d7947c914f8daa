#pragma once

#include <cstdint>
#include <string_view>

namespace ccgraph {

/// Deterministic 64-bit generator (splitmix64 update). Standard-library
/// distributions are not byte-stable across platforms, so sampling code
/// uses this directly.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound); bound must be nonzero. Rejection
    /// sampling, so the result is unbiased and platform-independent.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            std::uint64_t v = next();
            if (v >= threshold) return v % bound;
        }
    }

private:
    std::uint64_t state_;
};

/// FNV-1a, used to derive per-check seeds from string labels.
inline std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace ccgraph
