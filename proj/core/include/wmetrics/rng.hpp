#pragma once

#include <cstdint>

namespace wmetrics {

// splitmix64 finalizer; full-avalanche 64-bit mix.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Hashes (base, a, b) into an independent stream seed, so every sweep cell
// and perturbation trial draws from its own sequence regardless of the order
// the cells are evaluated in.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
    std::uint64_t h = mix64(base + 0x9E3779B97F4A7C15ull);
    h = mix64(h ^ (a + 0x9E3779B97F4A7C15ull));
    h = mix64(h ^ (b + 0x6A09E667F3BCC909ull));
    return h;
}

// Deterministic splitmix64 generator. Self-contained so identical seeds give
// identical streams on every platform and standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ull;
        return mix64(state_);
    }

    // Uniform in [0, 1) with 53 random bits.
    double uniform01() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform01();
    }

    // Uniform integer in [0, bound); rejection keeps the draw unbiased.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next_u64();
            if (r >= threshold) {
                return r % bound;
            }
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace wmetrics
