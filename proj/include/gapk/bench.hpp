#ifndef GAPK_BENCH_HPP
#define GAPK_BENCH_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gapk/data.hpp"
#include "gapk/init.hpp"
#include "gapk/kmeans.hpp"
#include "gapk/metrics.hpp"

namespace gapk {

enum class OutputFormat { text, csv };

enum class DatasetKind { column, density, normal };

struct DatasetSpec {
    std::string name;
    DatasetKind kind = DatasetKind::column;
    std::size_t k = 0;
    bool optional = false;

    // column / density
    std::filesystem::path path;
    TextFormat format;
    std::size_t column = 0;
    std::size_t population_column = 0;
    std::size_t land_column = 1;
    std::size_t water_column = 2;

    // normal
    std::size_t n = 0;
    double mean = 0.0;
    double sd = 1.0;
    std::uint64_t seed = 0;
};

struct ExperimentConfig {
    std::vector<DatasetSpec> datasets;
    std::vector<InitMethod> methods{InitMethod::gap, InitMethod::kmeans_pp, InitMethod::random};
    std::size_t runs = 10;
    std::uint64_t seed_base = 1;
    std::optional<std::size_t> trials;
    std::size_t max_iters = kDefaultMaxIters;
};

// Flat "key = value" text; '#' starts a comment. Global keys: runs, seed,
// methods, trials, max_iters. Dataset keys: dataset.<name>.<field> with fields
// type (column|density|normal), k, optional, path, column, header, delimiter,
// population_column, land_column, water_column, n, mean, sd, seed.
// Relative paths resolve against base_dir. Throws ParameterError.
ExperimentConfig parse_experiment_config(std::istream& in, const std::filesystem::path& base_dir = {});
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

DataVector load_dataset(const DatasetSpec& spec);

struct RunRecord {
    std::string dataset;
    InitMethod method = InitMethod::gap;
    std::size_t k = 0;
    std::size_t run = 0;
    std::uint64_t seed = 0;
    double sse_normalized = 0.0;
    double cost_j = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
    RunTiming timing;
};

struct BenchmarkReport {
    std::vector<RunRecord> runs;
    std::vector<BenchmarkRow> rows;  // one per (dataset, method), config order
    std::vector<std::string> warnings;
    std::vector<std::string> failures;
};

// Runs every (dataset, method) pair `runs` times, serially. Run r of a
// randomized method uses seed seed_base + r. Optional datasets whose file is
// missing are skipped with a warning; other dataset errors are collected in
// failures and the remaining datasets still run.
BenchmarkReport run_benchmark(const ExperimentConfig& config);

// Per-run rows, then one aggregate row per (dataset, method). Reduction
// columns compare each method against gap: reduction_percent(method, gap).
// omit_timing leaves the timing fields empty so repeated runs match byte for byte.
void write_benchmark_csv(const BenchmarkReport& report, bool omit_timing, std::ostream& out);

// Three aligned tables: normalized SSE, running time, center variance.
void write_benchmark_text(const BenchmarkReport& report, std::ostream& out);

struct ClusterOptions {
    std::filesystem::path input;
    std::size_t column = 0;
    TextFormat format;
    std::size_t k = 0;
    InitializerSpec init;
    std::size_t max_iters = kDefaultMaxIters;
    OutputFormat output = OutputFormat::text;
};

// Clusters one column and prints centers, value ranges, counts and costs.
void run_cluster(const ClusterOptions& options, std::ostream& out);

// %.9g
std::string format_number(double value);

}  // namespace gapk

#endif  // GAPK_BENCH_HPP
