#include <doctest.h>

#include <random>
#include <vector>

#include "gapk/errors.hpp"
#include "gapk/oracle.hpp"

using gapk::DataVector;
using Boundaries = std::vector<std::size_t>;

TEST_CASE("dp_optimal on the three-point example") {
    // Splits {1|2,10} cost 32, {1,2|10} cost 0.5.
    const auto data = DataVector::from_unsorted({1, 2, 10});
    const auto best = gapk::dp_optimal(data, 2);
    CHECK(best.boundaries == Boundaries{1});
    CHECK(best.sse == 0.5);
    CHECK(best.sse_normalized == doctest::Approx(0.5 / 3.0));

    const auto brute = gapk::brute_force_optimal(data, 2);
    CHECK(brute.boundaries == best.boundaries);
    CHECK(brute.sse == best.sse);
}

TEST_CASE("k = n and k = 1") {
    const auto data = DataVector::from_unsorted({3, 1, 4, 1.5, 9, 2.6});
    CHECK(gapk::dp_optimal(data, data.size()).sse == 0.0);
    CHECK(gapk::brute_force_optimal(data, data.size()).sse == 0.0);

    double mean = 0.0;
    for (const double v : data.values()) mean += v;
    mean /= static_cast<double>(data.size());
    double sse = 0.0;
    for (const double v : data.values()) sse += (v - mean) * (v - mean);
    CHECK(gapk::brute_force_optimal(data, 1).sse == sse);
    CHECK(gapk::dp_optimal(data, 1).boundaries.empty());
}

TEST_CASE("ties resolve to the lexicographically smallest boundaries") {
    // {0|1,2} and {0,1|2} both cost 0.5.
    const auto data = DataVector::from_unsorted({0, 1, 2});
    CHECK(gapk::dp_optimal(data, 2).boundaries == Boundaries{0});
    CHECK(gapk::brute_force_optimal(data, 2).boundaries == Boundaries{0});
}

TEST_CASE("10 random points, k = 3: minimum over all 36 splits") {
    std::mt19937_64 gen(10);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    std::vector<double> v(10);
    for (auto& x : v) x = dist(gen);
    const auto data = DataVector::from_unsorted(v);
    const auto values = data.values();

    auto segment_sse = [&](std::size_t first, std::size_t last) {
        double mean = 0.0;
        for (std::size_t i = first; i <= last; ++i) mean += values[i];
        mean /= static_cast<double>(last - first + 1);
        double s = 0.0;
        for (std::size_t i = first; i <= last; ++i) s += (values[i] - mean) * (values[i] - mean);
        return s;
    };
    double best = INFINITY;
    int splits = 0;
    for (std::size_t a = 0; a < 9; ++a) {
        for (std::size_t b = a + 1; b < 9; ++b) {
            ++splits;
            best = std::min(best, segment_sse(0, a) + segment_sse(a + 1, b) + segment_sse(b + 1, 9));
        }
    }
    CHECK(splits == 36);
    CHECK(gapk::dp_optimal(data, 3).sse == doctest::Approx(best).epsilon(1e-12));
}

TEST_CASE("dp and brute force agree on random small instances") {
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> dist(-10.0, 10.0);
    for (int instance = 0; instance < 300; ++instance) {
        std::vector<double> v(1 + gen() % 14);
        for (auto& x : v) x = dist(gen);
        const auto data = DataVector::from_unsorted(v);
        const std::size_t k = 1 + gen() % std::min<std::size_t>(data.size(), 5);
        const auto dp = gapk::dp_optimal(data, k);
        const auto brute = gapk::brute_force_optimal(data, k);
        CAPTURE(instance);
        CHECK(dp.boundaries == brute.boundaries);
        CHECK(dp.sse == brute.sse);
        CHECK(dp.boundaries.size() == k - 1);
    }
}

TEST_CASE("oracle errors") {
    const auto data = DataVector::from_unsorted({1, 2, 3});
    CHECK_THROWS_AS((void)gapk::dp_optimal(data, 4), gapk::ParameterError);
    CHECK_THROWS_AS((void)gapk::dp_optimal(data, 0), gapk::ParameterError);
    CHECK_THROWS_AS((void)gapk::brute_force_optimal(data, 4), gapk::ParameterError);
    const auto big = DataVector::from_unsorted(std::vector<double>(21, 1.0));
    CHECK_THROWS_AS((void)gapk::brute_force_optimal(big, 2), gapk::ParameterError);
}
