// Deterministic random source. std::uniform_int_distribution and
// std::shuffle are implementation-defined, so every draw here goes
// through our own sampling to keep seeded runs byte-identical across
// standard libraries.
#ifndef GGEN_RNG_HPP
#define GGEN_RNG_HPP

#include <cstdint>
#include <random>
#include <vector>

namespace ggen {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Unbiased integer in [0, bound) via rejection sampling. bound > 0.
    std::uint64_t next_index(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = engine_();
            if (r >= threshold)
                return r % bound;
        }
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        // Fisher-Yates
        for (std::size_t i = v.size(); i > 1; --i) {
            const std::size_t j = static_cast<std::size_t>(next_index(i));
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace ggen

#endif
