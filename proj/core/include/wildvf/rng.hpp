#ifndef WILDVF_RNG_HPP
#define WILDVF_RNG_HPP

#include <cstdint>

namespace wildvf {

/// Counter-based 64-bit generator: output k is splitmix64(seed + k * golden).
/// The stream is a pure function of (seed, counter), so fixtures are
/// reproducible across platforms and languages.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) noexcept : seed_(seed) {}

    std::uint64_t next() noexcept;

    /// Uniform integer in [lo, hi], hi >= lo (rejection, no modulo bias).
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) noexcept;

    /// True with probability num/den.
    bool chance(std::uint64_t num, std::uint64_t den) noexcept;

    std::uint64_t seed() const noexcept { return seed_; }
    std::uint64_t counter() const noexcept { return counter_; }

private:
    std::uint64_t seed_;
    std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64(std::uint64_t x) noexcept;

}  // namespace wildvf

#endif
