#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "gapk/data.hpp"
#include "gapk/errors.hpp"
#include "gapk/init.hpp"

namespace {

using gapk::DataVector;
using gapk::Segment;

// Replays a fixed list of uniform draws.
class ScriptedSource final : public gapk::RandomSource {
public:
    explicit ScriptedSource(std::vector<double> draws) : draws_(std::move(draws)) {}
    double next_unit() override {
        REQUIRE(next_ < draws_.size());
        return draws_[next_++];
    }
    std::size_t used() const { return next_; }

private:
    std::vector<double> draws_;
    std::size_t next_ = 0;
};

DataVector make_random_data(std::mt19937_64& gen, std::size_t n, bool coarse) {
    std::uniform_real_distribution<double> dist(0.0, 50.0);
    std::vector<double> v(n);
    for (auto& x : v) x = coarse ? std::round(dist(gen)) : dist(gen);
    return DataVector::from_unsorted(std::move(v));
}

}  // namespace

TEST_CASE("compute_gaps") {
    CHECK(gapk::compute_gaps(DataVector::from_unsorted({1, 4, 9})) == std::vector<double>{3, 5});
    CHECK(gapk::compute_gaps(DataVector::from_unsorted({5, 5, 5})) == std::vector<double>{0, 0});
    CHECK_THROWS_AS((void)gapk::compute_gaps(DataVector::from_unsorted({2})), gapk::ParameterError);
}

TEST_CASE("gap_seed on the hand example") {
    const auto data = DataVector::from_unsorted({1, 2, 3, 10, 11, 12, 20, 21});
    const auto seed = gapk::gap_seed(data, 3);
    CHECK(seed.centers == std::vector<double>{2.0, 11.0, 20.5});
    REQUIRE(seed.segments);
    CHECK(*seed.segments == std::vector<Segment>{{0, 2}, {3, 5}, {6, 7}});
}

TEST_CASE("gap_seed with k = 1 is the overall mean") {
    const auto data = DataVector::from_unsorted({4, 8, 15, 16, 23, 42});
    const auto seed = gapk::gap_seed(data, 1);
    CHECK(seed.centers == std::vector<double>{18.0});
    CHECK(*seed.segments == std::vector<Segment>{{0, 5}});
}

TEST_CASE("gap_seed on Iris sepal length, k = 5") {
    // Frozen from an independent script: rank all 149 gaps (wider first, later
    // position first on ties), cut, and average left to right.
    const auto data = gapk::load_column(GAPK_DATA_DIR "/iris.csv", 0, {',', true});
    const auto seed = gapk::gap_seed(data, 5);
    CHECK(*seed.segments == std::vector<Segment>{{0, 142}, {143, 143}, {144, 144}, {145, 148}, {149, 149}});
    CHECK(seed.centers ==
          std::vector<double>{0x1.703f03f03f040p+2, 0x1.d99999999999ap+2, 0x1.e666666666666p+2,
                              0x1.ecccccccccccdp+2, 0x1.f99999999999ap+2});
}

TEST_CASE("gap_seed breaks equal gaps toward the later position") {
    // Gaps 1, 1, 1: both k = 2 and k = 3 cut at the later equal gaps.
    const auto data = DataVector::from_unsorted({0, 1, 2, 3});
    CHECK(*gapk::gap_seed(data, 2).segments == std::vector<Segment>{{0, 2}, {3, 3}});
    CHECK(*gapk::gap_seed(data, 3).segments == std::vector<Segment>{{0, 1}, {2, 2}, {3, 3}});
}

TEST_CASE("gap_seed parameter errors") {
    const auto data = DataVector::from_unsorted({1, 1, 2, 2, 3});
    CHECK_THROWS_AS((void)gapk::gap_seed(data, 0), gapk::ParameterError);
    CHECK_THROWS_AS((void)gapk::gap_seed(data, 4), gapk::ParameterError);
    CHECK(gapk::gap_seed(data, 3).centers == std::vector<double>{1, 2, 3});
}

TEST_CASE("gap_seed properties on random data") {
    std::mt19937_64 gen(20240501);
    for (int instance = 0; instance < 200; ++instance) {
        const bool coarse = instance % 2 == 1;
        const std::size_t n = 2 + gen() % 120;
        const auto data = make_random_data(gen, n, coarse);
        const std::size_t k = 1 + gen() % std::min<std::size_t>(data.distinct_count(), 12);
        const auto seed = gapk::gap_seed(data, k);
        const auto& segs = *seed.segments;
        const auto values = data.values();
        CAPTURE(instance);

        REQUIRE(seed.centers.size() == k);
        REQUIRE(segs.size() == k);
        CHECK(segs.front().first == 0);
        CHECK(segs.back().last == n - 1);
        for (std::size_t j = 1; j < k; ++j) CHECK(segs[j].first == segs[j - 1].last + 1);

        // Segment means, left-to-right.
        for (std::size_t j = 0; j < k; ++j) {
            double sum = 0.0;
            for (std::size_t i = segs[j].first; i <= segs[j].last; ++i) sum += values[i];
            CHECK(seed.centers[j] == sum / static_cast<double>(segs[j].size()));
        }
        CHECK(std::is_sorted(seed.centers.begin(), seed.centers.end()));

        // Every cut gap is at least as wide as every gap left inside a segment.
        double narrowest_cut = INFINITY;
        for (std::size_t j = 1; j < k; ++j) {
            narrowest_cut = std::min(narrowest_cut, values[segs[j].first] - values[segs[j - 1].last]);
        }
        for (const auto& s : segs) {
            for (std::size_t i = s.first; i < s.last; ++i) CHECK(values[i + 1] - values[i] <= narrowest_cut);
        }

        CHECK(gapk::gap_seed(data, k) == seed);
    }
}

TEST_CASE("kmeans_pp_seed") {
    SUBCASE("k = 1 picks a data value") {
        const auto data = DataVector::from_unsorted({3, 7, 11});
        gapk::Mt64Source rng(5);
        const auto seed = gapk::kmeans_pp_seed(data, 1, 3, rng);
        REQUIRE(seed.centers.size() == 1);
        CHECK(std::find(data.values().begin(), data.values().end(), seed.centers[0]) != data.values().end());
        CHECK_FALSE(seed.segments);
    }
    SUBCASE("identical values") {
        const auto data = DataVector::from_unsorted({4, 4, 4, 4, 4});
        gapk::Mt64Source rng(9);
        CHECK(gapk::kmeans_pp_seed(data, 4, 2, rng).centers == std::vector<double>{4, 4, 4, 4});
    }
    SUBCASE("scripted draws: uniform first pick, then D^2-weighted pick") {
        // Weights after choosing 0 are {0, 1, 81, 100}; u = 0.999 targets 181.8
        // of 182, which lands on the last point.
        const auto data = DataVector::from_unsorted({0, 1, 9, 10});
        ScriptedSource rng({0.0, 0.999});
        CHECK(gapk::kmeans_pp_seed(data, 2, 1, rng).centers == std::vector<double>{0, 10});
        CHECK(rng.used() == 2);
    }
    SUBCASE("best of trials keeps the candidate with the smallest potential") {
        // Candidate 1 leaves potential 0+0+64+81 = 145, candidate 10 leaves 2.
        const auto data = DataVector::from_unsorted({0, 1, 9, 10});
        ScriptedSource first_weak({0.0, 0.001, 0.999});
        CHECK(gapk::kmeans_pp_seed(data, 2, 2, first_weak).centers == std::vector<double>{0, 10});
        ScriptedSource first_strong({0.0, 0.999, 0.001});
        CHECK(gapk::kmeans_pp_seed(data, 2, 2, first_strong).centers == std::vector<double>{0, 10});
    }
    SUBCASE("seeded determinism and sorted output") {
        std::mt19937_64 gen(3);
        const auto data = make_random_data(gen, 300, false);
        gapk::Mt64Source a(77);
        gapk::Mt64Source b(77);
        const auto sa = gapk::kmeans_pp_seed(data, 10, 3, a);
        CHECK(sa == gapk::kmeans_pp_seed(data, 10, 3, b));
        CHECK(std::is_sorted(sa.centers.begin(), sa.centers.end()));
        CHECK(std::set<double>(sa.centers.begin(), sa.centers.end()).size() == 10);
    }
    SUBCASE("errors") {
        const auto data = DataVector::from_unsorted({1, 2});
        gapk::Mt64Source rng(1);
        CHECK_THROWS_AS((void)gapk::kmeans_pp_seed(data, 3, 1, rng), gapk::ParameterError);
        CHECK_THROWS_AS((void)gapk::kmeans_pp_seed(data, 1, 0, rng), gapk::ParameterError);
    }
}

TEST_CASE("random_seed") {
    SUBCASE("k = n takes every value") {
        const auto data = DataVector::from_unsorted({5, 1, 3, 2});
        gapk::Mt64Source rng(11);
        CHECK(gapk::random_seed(data, 4, rng).centers == std::vector<double>{1, 2, 3, 5});
    }
    SUBCASE("single value") {
        const auto data = DataVector::from_unsorted({7});
        gapk::Mt64Source rng(0);
        CHECK(gapk::random_seed(data, 1, rng).centers == std::vector<double>{7});
    }
    SUBCASE("fixed seed is repeatable; positions are distinct") {
        std::vector<double> v(50);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i);
        const auto data = DataVector::from_unsorted(v);
        gapk::Mt64Source a(123);
        gapk::Mt64Source b(123);
        const auto sa = gapk::random_seed(data, 20, a);
        CHECK(sa == gapk::random_seed(data, 20, b));
        CHECK(std::set<double>(sa.centers.begin(), sa.centers.end()).size() == 20);
    }
    SUBCASE("k > n") {
        const auto data = DataVector::from_unsorted({1, 2});
        gapk::Mt64Source rng(1);
        CHECK_THROWS_AS((void)gapk::random_seed(data, 3, rng), gapk::ParameterError);
    }
}

TEST_CASE("seed dispatch and defaults") {
    CHECK(gapk::default_trials(1) == 2);
    CHECK(gapk::default_trials(5) == 3);
    CHECK(gapk::default_trials(100) == 6);
    CHECK(gapk::parse_init_method("kmeans++") == gapk::InitMethod::kmeans_pp);
    CHECK(gapk::parse_init_method("gap") == gapk::InitMethod::gap);
    CHECK_FALSE(gapk::parse_init_method("forgy"));

    const auto data = DataVector::from_unsorted({1, 2, 3, 10, 11, 12, 20, 21});
    const gapk::InitializerSpec gap{gapk::InitMethod::gap, 99, std::nullopt};
    CHECK(gapk::seed(data, 3, gap) == gapk::gap_seed(data, 3));
    const gapk::InitializerSpec pp{gapk::InitMethod::kmeans_pp, 4, std::nullopt};
    gapk::Mt64Source rng(4);
    CHECK(gapk::seed(data, 3, pp) == gapk::kmeans_pp_seed(data, 3, gapk::default_trials(3), rng));
}
