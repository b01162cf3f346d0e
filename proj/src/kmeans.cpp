#include "gapk/kmeans.hpp"

#include <algorithm>
#include <string>

#include "gapk/errors.hpp"

namespace gapk {

namespace {

void check_assignment(const DataVector& data, std::span<const std::size_t> assignment, std::size_t k) {
    if (assignment.size() != data.size()) {
        throw ParameterError("assignment has " + std::to_string(assignment.size()) + " entries for " +
                             std::to_string(data.size()) + " points");
    }
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        if (assignment[i] >= k) {
            throw ParameterError("assignment[" + std::to_string(i) + "] = " + std::to_string(assignment[i]) +
                                 " is out of range for k = " + std::to_string(k));
        }
    }
}

}  // namespace

std::vector<std::size_t> assign_points(const DataVector& data, std::span<const double> centers) {
    if (centers.empty()) throw ParameterError("assign_points: no centers");
    if (!std::is_sorted(centers.begin(), centers.end())) {
        throw ParameterError("assign_points: centers must be sorted ascending");
    }
    std::vector<std::size_t> assignment(data.size());
    const auto values = data.values();
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double x = values[i];
        // Only the first center >= x and the first copy of the largest center
        // below x can be nearest; the lower index wins ties.
        const auto upper = std::lower_bound(centers.begin(), centers.end(), x);
        if (upper == centers.begin()) {
            assignment[i] = 0;
            continue;
        }
        const auto lower = std::lower_bound(centers.begin(), upper, *(upper - 1));
        std::size_t best = static_cast<std::size_t>(lower - centers.begin());
        if (upper != centers.end()) {
            const double below = (x - *lower) * (x - *lower);
            const double above = (x - *upper) * (x - *upper);
            if (above < below) best = static_cast<std::size_t>(upper - centers.begin());
        }
        assignment[i] = best;
    }
    return assignment;
}

std::vector<double> update_centers(const DataVector& data, std::span<const std::size_t> assignment,
                                   std::span<const double> previous) {
    const std::size_t k = previous.size();
    check_assignment(data, assignment, k);
    std::vector<double> sums(k, 0.0);
    std::vector<std::size_t> counts(k, 0);
    const auto values = data.values();
    for (std::size_t i = 0; i < values.size(); ++i) {
        sums[assignment[i]] += values[i];
        ++counts[assignment[i]];
    }
    std::vector<double> centers(previous.begin(), previous.end());
    for (std::size_t j = 0; j < k; ++j) {
        if (counts[j] > 0) centers[j] = sums[j] / static_cast<double>(counts[j]);
    }
    return centers;
}

double cost_c(const DataVector& data, std::span<const double> centers, std::span<const std::size_t> assignment) {
    check_assignment(data, assignment, centers.size());
    const auto values = data.values();
    double sse = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        const double r = values[i] - centers[assignment[i]];
        sse += r * r;
    }
    return sse / static_cast<double>(values.size());
}

double cost_j(const DataVector& data, std::span<const double> centers, std::span<const std::size_t> assignment) {
    if (!std::is_sorted(centers.begin(), centers.end())) {
        throw ParameterError("cost_j: centers must be sorted ascending");
    }
    double spread = 0.0;
    for (std::size_t j = 0; j + 1 < centers.size(); ++j) spread += centers[j + 1] - centers[j];
    return cost_c(data, centers, assignment) - spread;
}

ClusteringResult lloyd(const DataVector& data, const SeedResult& seed, std::size_t max_iters) {
    if (seed.centers.empty()) throw ParameterError("lloyd: seed has no centers");
    if (max_iters < 1) throw ParameterError("lloyd: max_iters must be at least 1");

    ClusteringResult result;
    std::vector<double> centers = seed.centers;
    std::vector<std::size_t> assignment;
    for (std::size_t round = 1; round <= max_iters; ++round) {
        assignment = assign_points(data, centers);
        result.cost_history.push_back(cost_c(data, centers, assignment));
        auto next = update_centers(data, assignment, centers);
        // An emptied duplicate center keeps its value while its twin moves, so
        // the means can come back out of order; relabel by position.
        std::sort(next.begin(), next.end());
        result.iterations = round;
        if (next == centers) {
            result.converged = true;
            break;
        }
        centers = std::move(next);
    }
    if (!result.converged) {
        // Report a nearest-center assignment for the final centers.
        assignment = assign_points(data, centers);
        result.cost_history.push_back(cost_c(data, centers, assignment));
    }

    result.sse_normalized = result.cost_history.back();
    result.cost_j = cost_j(data, centers, assignment);
    result.centers = std::move(centers);
    result.assignment = std::move(assignment);
    return result;
}

}  // namespace gapk
