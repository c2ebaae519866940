#pragma once

#include <cstdint>
#include <string_view>

namespace cliquerec {

// 64-bit shift-xor-multiply mixer (splitmix64 finalizer). Every seeded stream
// in the project derives from these exact constants so that independent
// implementations of the protocols agree on all coin flips.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// splitmix64 stream: state advances by the golden-ratio increment, outputs
// pass through mix64.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    // Uniform draw in [0, m) by rejection; exact and platform-independent.
    std::uint64_t uniform_below(std::uint64_t m) {
        // 2^64 mod m; outputs below this would bias the low residue classes.
        const std::uint64_t skip = (0 - m) % m;
        for (;;) {
            const std::uint64_t x = next();
            if (x >= skip) return x % m;
        }
    }

private:
    std::uint64_t state_;
};

// FNV-1a over bytes; stable across platforms, used to seed deterministic
// searches from identifiers.
inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

}  // namespace cliquerec
