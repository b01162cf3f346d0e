#ifndef GAPK_KMEANS_HPP
#define GAPK_KMEANS_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "gapk/data.hpp"
#include "gapk/init.hpp"

namespace gapk {

inline constexpr std::size_t kDefaultMaxIters = 1000;

struct ClusteringResult {
    std::vector<double> centers;         // sorted ascending
    std::vector<std::size_t> assignment;  // one center index per data point
    std::size_t iterations = 0;           // assign/update rounds performed
    bool converged = false;
    double sse_normalized = 0.0;
    double cost_j = 0.0;
    // Normalized SSE of each round's assignment against the centers it was
    // assigned to, in order; the last entry equals sse_normalized.
    std::vector<double> cost_history;

    friend bool operator==(const ClusteringResult&, const ClusteringResult&) = default;
};

// Nearest center by squared distance; ties go to the lower index.
std::vector<std::size_t> assign_points(const DataVector& data, std::span<const double> centers);

// Cluster means by left-to-right summation. A cluster without members keeps
// its entry from `previous`, which also fixes k.
std::vector<double> update_centers(const DataVector& data, std::span<const std::size_t> assignment,
                                   std::span<const double> previous);

// Lloyd iteration until the centers repeat exactly or max_iters rounds ran.
ClusteringResult lloyd(const DataVector& data, const SeedResult& seed, std::size_t max_iters = kDefaultMaxIters);

// Sum of squared residuals divided by n.
double cost_c(const DataVector& data, std::span<const double> centers, std::span<const std::size_t> assignment);

// cost_c minus the summed distance between consecutive sorted centers.
double cost_j(const DataVector& data, std::span<const double> centers, std::span<const std::size_t> assignment);

}  // namespace gapk

#endif  // GAPK_KMEANS_HPP
