#include "gapk/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "gapk/errors.hpp"

namespace gapk {

namespace {

void check_k(const DataVector& data, std::size_t k, const char* who) {
    if (k < 1) throw ParameterError(std::string(who) + ": k must be at least 1");
    if (k > data.size()) {
        throw ParameterError(std::string(who) + ": k = " + std::to_string(k) + " exceeds data size " +
                             std::to_string(data.size()));
    }
}

// Segment cost from prefix sums of mean-shifted values:
// sum (d - mu)^2 = sum d^2 - (sum d)^2 / m over [first, last).
class SegmentCost {
public:
    explicit SegmentCost(std::span<const double> values) : sum_(values.size() + 1), sum_sq_(values.size() + 1) {
        double shift = 0.0;
        for (const double v : values) shift += v;
        shift /= static_cast<double>(values.size());
        for (std::size_t i = 0; i < values.size(); ++i) {
            const double v = values[i] - shift;
            sum_[i + 1] = sum_[i] + v;
            sum_sq_[i + 1] = sum_sq_[i] + v * v;
        }
    }

    double operator()(std::size_t first, std::size_t last) const {
        const double s = sum_[last] - sum_[first];
        const double cost = (sum_sq_[last] - sum_sq_[first]) - s * s / static_cast<double>(last - first);
        return std::max(cost, 0.0);
    }

private:
    std::vector<double> sum_;
    std::vector<double> sum_sq_;
};

OptimalPartition finish(const DataVector& data, std::vector<std::size_t> boundaries) {
    const auto values = data.values();
    OptimalPartition out;
    std::size_t first = 0;
    double sse = 0.0;
    auto add_segment = [&](std::size_t last) {
        double sum = 0.0;
        for (std::size_t i = first; i <= last; ++i) sum += values[i];
        const double mean = sum / static_cast<double>(last - first + 1);
        for (std::size_t i = first; i <= last; ++i) sse += (values[i] - mean) * (values[i] - mean);
        first = last + 1;
    };
    for (const std::size_t b : boundaries) add_segment(b);
    add_segment(values.size() - 1);
    out.boundaries = std::move(boundaries);
    out.sse = sse;
    out.sse_normalized = sse / static_cast<double>(values.size());
    return out;
}

}  // namespace

OptimalPartition dp_optimal(const DataVector& data, std::size_t k) {
    check_k(data, k, "dp_optimal");
    const std::size_t n = data.size();
    const SegmentCost cost(data.values());
    constexpr double inf = std::numeric_limits<double>::infinity();

    // best[m][i]: minimum cost of splitting the suffix [i, n) into m segments.
    // choice[m][i]: exclusive end of the first of those segments (smallest on ties).
    std::vector<std::vector<double>> best(k + 1, std::vector<double>(n + 1, inf));
    std::vector<std::vector<std::size_t>> choice(k + 1, std::vector<std::size_t>(n + 1, n));
    for (std::size_t i = 0; i < n; ++i) best[1][i] = cost(i, n);
    for (std::size_t m = 2; m <= k; ++m) {
        for (std::size_t i = 0; i + m <= n; ++i) {
            for (std::size_t end = i + 1; end + (m - 1) <= n; ++end) {
                const double candidate = cost(i, end) + best[m - 1][end];
                if (candidate < best[m][i]) {
                    best[m][i] = candidate;
                    choice[m][i] = end;
                }
            }
        }
    }

    std::vector<std::size_t> boundaries;
    std::size_t start = 0;
    for (std::size_t m = k; m > 1; --m) {
        const std::size_t end = choice[m][start];
        boundaries.push_back(end - 1);
        start = end;
    }
    return finish(data, std::move(boundaries));
}

OptimalPartition brute_force_optimal(const DataVector& data, std::size_t k) {
    check_k(data, k, "brute_force_optimal");
    const std::size_t n = data.size();
    if (n > kBruteForceMaxN) {
        throw ParameterError("brute_force_optimal: n = " + std::to_string(n) + " exceeds " +
                             std::to_string(kBruteForceMaxN));
    }
    const SegmentCost cost(data.values());

    // Boundary lists in lexicographic order: last-point indices b_0 < ... < b_{k-2} < n - 1.
    std::vector<std::size_t> current(k - 1);
    for (std::size_t j = 0; j + 1 < k; ++j) current[j] = j;
    std::vector<std::size_t> best_boundaries = current;
    double best_cost = std::numeric_limits<double>::infinity();
    while (true) {
        double total = 0.0;
        std::size_t first = 0;
        for (const std::size_t b : current) {
            total += cost(first, b + 1);
            first = b + 1;
        }
        total += cost(first, n);
        if (total < best_cost) {
            best_cost = total;
            best_boundaries = current;
        }

        // Next combination of k - 1 values from [0, n - 2].
        std::size_t j = current.size();
        while (j > 0 && current[j - 1] == (n - 2) - (current.size() - j)) --j;
        if (j == 0) break;
        ++current[j - 1];
        for (std::size_t t = j; t < current.size(); ++t) current[t] = current[t - 1] + 1;
    }
    return finish(data, std::move(best_boundaries));
}

}  // namespace gapk
