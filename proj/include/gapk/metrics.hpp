#ifndef GAPK_METRICS_HPP
#define GAPK_METRICS_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "gapk/data.hpp"
#include "gapk/init.hpp"
#include "gapk/kmeans.hpp"

namespace gapk {

// Replicability spread of repeated runs. Each run's centers are sorted and
// matched by position; per position the population variance over runs is
// taken and the k variances are averaged. Needs >= 2 runs of equal k.
double center_variance(std::span<const std::vector<double>> center_sets);
double center_variance(std::span<const ClusteringResult> runs);

struct RunTiming {
    double init_seconds = 0.0;
    double total_seconds = 0.0;  // seeding + Lloyd
};

struct TimedRun {
    ClusteringResult result;
    RunTiming timing;
};

// Wall-clock (steady clock) timing of seeding and of seeding + Lloyd.
TimedRun time_run(const DataVector& data, const InitializerSpec& spec, std::size_t k,
                  std::size_t max_iters = kDefaultMaxIters);

// (baseline - candidate) / baseline * 100. Positive when candidate is smaller.
double reduction_percent(double baseline, double candidate);

struct BenchmarkRow {
    std::string dataset;
    std::string method;
    std::size_t k = 0;
    std::size_t runs = 0;
    double sse_normalized = 0.0;  // mean over runs
    double init_seconds = 0.0;    // mean over runs
    double total_seconds = 0.0;   // mean over runs
    double center_variance = 0.0;
};

}  // namespace gapk

#endif  // GAPK_METRICS_HPP
