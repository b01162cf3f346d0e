#ifndef GAPK_INIT_HPP
#define GAPK_INIT_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "gapk/data.hpp"
#include "gapk/random.hpp"

namespace gapk {

// Contiguous run of the sorted data, 0-based inclusive.
struct Segment {
    std::size_t first = 0;
    std::size_t last = 0;

    std::size_t size() const noexcept { return last - first + 1; }
    friend bool operator==(const Segment&, const Segment&) = default;
};

struct SeedResult {
    std::vector<double> centers;  // sorted ascending
    // Only the gap method produces segments; centers[j] is the mean of segments[j].
    std::optional<std::vector<Segment>> segments;

    friend bool operator==(const SeedResult&, const SeedResult&) = default;
};

enum class InitMethod { gap, kmeans_pp, random };

std::string_view to_string(InitMethod method);
// Accepts "gap", "kmeanspp" (also "kmeans++", "kmeans_pp") and "random".
std::optional<InitMethod> parse_init_method(std::string_view name);

struct InitializerSpec {
    InitMethod method = InitMethod::gap;
    std::uint64_t rng_seed = 0;         // ignored by gap
    std::optional<std::size_t> trials;  // k-means++ only; unset means default_trials(k)
};

// 2 + floor(ln k).
std::size_t default_trials(std::size_t k);

// Differences between consecutive sorted values; size n - 1. Needs n >= 2.
std::vector<double> compute_gaps(const DataVector& data);

// Deterministic seeding: cut the sorted data at its k - 1 widest gaps and take
// each segment's mean. Equal gaps are ranked by position, later position first.
// Requires 1 <= k <= data.distinct_count().
SeedResult gap_seed(const DataVector& data, std::size_t k);

// k-means++ with best-of-`trials` greedy selection of each new center.
SeedResult kmeans_pp_seed(const DataVector& data, std::size_t k, std::size_t trials, RandomSource& rng);

// k data values drawn uniformly without replacement.
SeedResult random_seed(const DataVector& data, std::size_t k, RandomSource& rng);

// Dispatches on spec.method, owning a fresh Mt64Source seeded from spec.rng_seed.
SeedResult seed(const DataVector& data, std::size_t k, const InitializerSpec& spec);

}  // namespace gapk

#endif  // GAPK_INIT_HPP
