#include "gapk/init.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "gapk/errors.hpp"

namespace gapk {

namespace {

double segment_mean(std::span<const double> values, Segment seg) {
    double sum = 0.0;
    for (std::size_t i = seg.first; i <= seg.last; ++i) sum += values[i];
    return sum / static_cast<double>(seg.size());
}

void require_k_at_most_n(const DataVector& data, std::size_t k, const char* who) {
    if (k < 1) throw ParameterError(std::string(who) + ": k must be at least 1");
    if (k > data.size()) {
        throw ParameterError(std::string(who) + ": k = " + std::to_string(k) + " exceeds data size " +
                             std::to_string(data.size()));
    }
}

// Index i with probability weights[i] / total; falls back to a uniform pick
// when every weight is zero.
std::size_t draw_weighted(std::span<const double> weights, double total, RandomSource& rng) {
    if (!(total > 0.0)) return rng.next_index(weights.size());
    const double target = rng.next_unit() * total;
    double running = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] <= 0.0) continue;
        running += weights[i];
        last_positive = i;
        if (running > target) return i;
    }
    return last_positive;
}

}  // namespace

std::string_view to_string(InitMethod method) {
    switch (method) {
        case InitMethod::gap: return "gap";
        case InitMethod::kmeans_pp: return "kmeanspp";
        case InitMethod::random: return "random";
    }
    return "unknown";
}

std::optional<InitMethod> parse_init_method(std::string_view name) {
    if (name == "gap") return InitMethod::gap;
    if (name == "kmeanspp" || name == "kmeans++" || name == "kmeans_pp") return InitMethod::kmeans_pp;
    if (name == "random") return InitMethod::random;
    return std::nullopt;
}

std::size_t default_trials(std::size_t k) {
    return 2 + static_cast<std::size_t>(std::floor(std::log(static_cast<double>(std::max<std::size_t>(k, 1)))));
}

std::vector<double> compute_gaps(const DataVector& data) {
    if (data.size() < 2) throw ParameterError("compute_gaps: need at least 2 values");
    const auto values = data.values();
    std::vector<double> gaps(values.size() - 1);
    for (std::size_t i = 0; i + 1 < values.size(); ++i) gaps[i] = values[i + 1] - values[i];
    return gaps;
}

SeedResult gap_seed(const DataVector& data, std::size_t k) {
    if (k < 1) throw ParameterError("gap seed: k must be at least 1");
    const std::size_t distinct = data.distinct_count();
    if (k > distinct) {
        throw ParameterError("gap seed: k = " + std::to_string(k) + " exceeds the number of distinct values (" +
                             std::to_string(distinct) + ")");
    }
    const auto values = data.values();

    std::vector<std::size_t> cuts;
    if (k > 1) {
        const auto gaps = compute_gaps(data);
        std::vector<std::size_t> order(gaps.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        // Strict total order: wider gap first, then later position first.
        auto wider = [&](std::size_t a, std::size_t b) {
            return gaps[a] != gaps[b] ? gaps[a] > gaps[b] : a > b;
        };
        std::nth_element(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k - 2), order.end(), wider);
        cuts.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k - 1));
        std::sort(cuts.begin(), cuts.end());
    }

    // Cut i closes a segment at index i; the next one opens at i + 1.
    std::vector<Segment> segments;
    segments.reserve(k);
    std::size_t first = 0;
    for (const std::size_t cut : cuts) {
        segments.push_back({first, cut});
        first = cut + 1;
    }
    segments.push_back({first, values.size() - 1});

    SeedResult result;
    result.centers.reserve(k);
    for (const auto& seg : segments) result.centers.push_back(segment_mean(values, seg));
    result.segments = std::move(segments);
    return result;
}

SeedResult kmeans_pp_seed(const DataVector& data, std::size_t k, std::size_t trials, RandomSource& rng) {
    require_k_at_most_n(data, k, "k-means++ seed");
    if (trials < 1) throw ParameterError("k-means++ seed: trials must be at least 1");
    const auto values = data.values();
    const std::size_t n = values.size();

    std::vector<double> centers;
    centers.reserve(k);
    centers.push_back(values[rng.next_index(n)]);

    // Squared distance from each point to its nearest chosen center.
    std::vector<double> nearest(n);
    double potential = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        nearest[i] = (values[i] - centers[0]) * (values[i] - centers[0]);
        potential += nearest[i];
    }

    std::vector<double> candidate_nearest(n);
    std::vector<double> best_nearest(n);
    while (centers.size() < k) {
        double best_potential = std::numeric_limits<double>::infinity();
        double best_center = 0.0;
        for (std::size_t t = 0; t < trials; ++t) {
            const double candidate = values[draw_weighted(nearest, potential, rng)];
            double candidate_potential = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double d = (values[i] - candidate) * (values[i] - candidate);
                candidate_nearest[i] = std::min(nearest[i], d);
                candidate_potential += candidate_nearest[i];
            }
            if (candidate_potential < best_potential) {
                best_potential = candidate_potential;
                best_center = candidate;
                best_nearest.swap(candidate_nearest);
            }
        }
        centers.push_back(best_center);
        nearest.swap(best_nearest);
        potential = best_potential;
    }

    std::sort(centers.begin(), centers.end());
    return SeedResult{std::move(centers), std::nullopt};
}

SeedResult random_seed(const DataVector& data, std::size_t k, RandomSource& rng) {
    require_k_at_most_n(data, k, "random seed");
    const auto values = data.values();
    const std::size_t n = values.size();

    // Partial Fisher-Yates over positions.
    std::vector<std::size_t> positions(n);
    std::iota(positions.begin(), positions.end(), std::size_t{0});
    std::vector<double> centers;
    centers.reserve(k);
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t pick = j + rng.next_index(n - j);
        std::swap(positions[j], positions[pick]);
        centers.push_back(values[positions[j]]);
    }
    std::sort(centers.begin(), centers.end());
    return SeedResult{std::move(centers), std::nullopt};
}

SeedResult seed(const DataVector& data, std::size_t k, const InitializerSpec& spec) {
    switch (spec.method) {
        case InitMethod::gap:
            return gap_seed(data, k);
        case InitMethod::kmeans_pp: {
            Mt64Source rng(spec.rng_seed);
            return kmeans_pp_seed(data, k, spec.trials.value_or(default_trials(k)), rng);
        }
        case InitMethod::random: {
            Mt64Source rng(spec.rng_seed);
            return random_seed(data, k, rng);
        }
    }
    throw ParameterError("unknown initialization method");
}

}  // namespace gapk
