#include "gapk/metrics.hpp"

#include <algorithm>
#include <chrono>

#include "gapk/errors.hpp"

namespace gapk {

double center_variance(std::span<const std::vector<double>> center_sets) {
    if (center_sets.size() < 2) throw ParameterError("center_variance: need at least 2 runs");
    const std::size_t k = center_sets.front().size();
    if (k == 0) throw ParameterError("center_variance: runs have no centers");
    for (const auto& set : center_sets) {
        if (set.size() != k) throw ParameterError("center_variance: runs disagree on k");
    }

    std::vector<std::vector<double>> sorted(center_sets.begin(), center_sets.end());
    for (auto& set : sorted) std::sort(set.begin(), set.end());

    // Welford per position: identical runs leave mean and m2 exactly unchanged.
    double variance_sum = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
        double mean = 0.0;
        double m2 = 0.0;
        std::size_t count = 0;
        for (const auto& set : sorted) {
            ++count;
            const double delta = set[j] - mean;
            mean += delta / static_cast<double>(count);
            m2 += delta * (set[j] - mean);
        }
        variance_sum += m2 / static_cast<double>(count);
    }
    return variance_sum / static_cast<double>(k);
}

double center_variance(std::span<const ClusteringResult> runs) {
    std::vector<std::vector<double>> sets;
    sets.reserve(runs.size());
    for (const auto& run : runs) sets.push_back(run.centers);
    return center_variance(std::span<const std::vector<double>>(sets));
}

TimedRun time_run(const DataVector& data, const InitializerSpec& spec, std::size_t k, std::size_t max_iters) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    const SeedResult seeded = seed(data, k, spec);
    const auto seeded_at = clock::now();
    ClusteringResult result = lloyd(data, seeded, max_iters);
    const auto done = clock::now();

    const std::chrono::duration<double> init = seeded_at - start;
    const std::chrono::duration<double> total = done - start;
    return TimedRun{std::move(result), RunTiming{init.count(), total.count()}};
}

double reduction_percent(double baseline, double candidate) {
    if (baseline == 0.0) throw ParameterError("reduction_percent: baseline is zero");
    return (baseline - candidate) / baseline * 100.0;
}

}  // namespace gapk
