#pragma once

#include <cstdint>

namespace ehpo {

// Deterministic pseudo-random stream addressed by (master_seed, stream_index).
// The sequence is a pure function of the address: the same address always
// yields the same draws, and distinct addresses yield statistically
// independent streams. The generator is fixed by this implementation (a
// splitmix64 walk over a hashed starting state), so serialized experiment
// outputs are stable across platforms. Consumers pick seeds and indices; they
// never pick the generator.
class SeedStream {
public:
    SeedStream(std::uint64_t master_seed, std::uint64_t stream_index)
        : master_seed_(master_seed), stream_index_(stream_index) {
        state_ = mix(mix(master_seed) ^ mix(stream_index ^ 0xd1b54a32d192ed03ULL));
    }

    std::uint64_t master_seed() const { return master_seed_; }
    std::uint64_t stream_index() const { return stream_index_; }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1), 53 bits of precision.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Symmetric uniform draw in [-1, 1).
    double next_symmetric() { return 2.0 * next_unit() - 1.0; }

    // Uniform integer in [0, n); modulo rejection keeps the draw unbiased.
    std::uint64_t next_below(std::uint64_t n) {
        std::uint64_t threshold = (0 - n) % n;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t master_seed_;
    std::uint64_t stream_index_;
    std::uint64_t state_;
};

// Realizes G(r): one PRNG stream per (master seed, index) address.
inline SeedStream derive_seed(std::uint64_t master_seed, std::uint64_t stream_index) {
    return SeedStream(master_seed, stream_index);
}

} // namespace ehpo
