#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace toric {

// Seeded RNG with a bit-stable integer range mapping. mt19937_64 is fully
// specified by the standard; std::uniform_int_distribution is not, so the
// range reduction is done here to keep outputs identical across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next() { return eng_(); }

    // Uniform in [lo, hi], both inclusive. Requires lo <= hi.
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit =
            std::numeric_limits<std::uint64_t>::max() / span * span;
        std::uint64_t r = eng_();
        while (r >= limit)
            r = eng_();
        return lo + static_cast<std::int64_t>(r % span);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace toric
