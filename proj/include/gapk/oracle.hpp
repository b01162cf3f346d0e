#ifndef GAPK_ORACLE_HPP
#define GAPK_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "gapk/data.hpp"

namespace gapk {

// Exact minimum-SSE contiguous k-partition of sorted data.
//
// boundaries[j] is the index of the last point of segment j (k - 1 entries,
// strictly increasing). Among equal-cost partitions the lexicographically
// smallest boundary list is returned.
//
// `sse` is recomputed from the chosen partition with left-to-right segment
// means and one running sum in data order, the same arithmetic cost_c uses,
// so a Lloyd run that lands on the optimal partition reports the same bits.
struct OptimalPartition {
    std::vector<std::size_t> boundaries;
    double sse = 0.0;
    double sse_normalized = 0.0;
};

// O(k n^2) dynamic program over prefix sums.
OptimalPartition dp_optimal(const DataVector& data, std::size_t k);

// Enumerates every contiguous k-partition; n is limited to kBruteForceMaxN.
inline constexpr std::size_t kBruteForceMaxN = 20;
OptimalPartition brute_force_optimal(const DataVector& data, std::size_t k);

}  // namespace gapk

#endif  // GAPK_ORACLE_HPP
