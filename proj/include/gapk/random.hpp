#ifndef GAPK_RANDOM_HPP
#define GAPK_RANDOM_HPP

#include <cstddef>
#include <cstdint>
#include <random>

namespace gapk {

// Source of uniform doubles in [0, 1). Seeding routines take this by
// reference so tests can script the exact draw sequence.
class RandomSource {
public:
    virtual ~RandomSource() = default;
    virtual double next_unit() = 0;

    // floor(u * n), clamped to n - 1. n must be positive.
    std::size_t next_index(std::size_t n);
};

// mt19937_64 whose output sequence is fixed by the standard; the top 53 bits
// of each word become one double, so streams are identical on every platform.
class Mt64Source final : public RandomSource {
public:
    explicit Mt64Source(std::uint64_t seed) : engine_(seed) {}
    double next_unit() override;

private:
    std::mt19937_64 engine_;
};

}  // namespace gapk

#endif  // GAPK_RANDOM_HPP
