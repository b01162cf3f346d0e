// Command-line front end: cluster one column, reproduce the benchmark tables,
// or print the exact optimal partition.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gapk/bench.hpp"
#include "gapk/errors.hpp"
#include "gapk/oracle.hpp"

namespace {

constexpr int kExitParameter = 2;
constexpr int kExitData = 3;

char parse_delimiter(const std::string& text) {
    if (text == "space" || text == "whitespace" || text == "tab" || text == " ") return ' ';
    if (text == "comma") return ',';
    if (text.size() == 1) return text[0];
    throw gapk::ParameterError("--delimiter expects one character, 'comma' or 'whitespace'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"One-dimensional k-means with deterministic gap seeding"};
    app.require_subcommand(1);

    std::string input;
    std::size_t column = 0;
    std::string delimiter = ",";
    bool header = false;
    std::size_t k = 0;
    std::string method = "gap";
    std::uint64_t seed = 1;
    std::size_t trials = 0;
    std::size_t max_iters = gapk::kDefaultMaxIters;
    std::string format = "text";

    auto add_input_flags = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "Delimited text file")->required();
        cmd->add_option("--column", column, "Zero-based column index");
        cmd->add_option("--delimiter", delimiter, "Field delimiter (default ',')");
        cmd->add_flag("--header", header, "Skip the first row");
        cmd->add_option("--k", k, "Number of clusters")->required();
    };

    auto* cluster = app.add_subcommand("cluster", "Cluster one column and print centers and class breaks");
    add_input_flags(cluster);
    cluster->add_option("--method", method, "gap | kmeanspp | random");
    cluster->add_option("--seed", seed, "RNG seed for kmeanspp/random");
    cluster->add_option("--trials", trials, "k-means++ trials per center (default 2 + floor(ln k))");
    cluster->add_option("--max-iters", max_iters, "Lloyd iteration cap");
    cluster->add_option("--format", format, "text | csv");

    std::string config_path;
    std::size_t runs = 0;
    bool omit_timing = false;
    auto* bench = app.add_subcommand("bench", "Run the accuracy/speed/replicability benchmark");
    bench->add_option("--bench,--config", config_path, "Benchmark config file")->required();
    bench->add_option("--runs", runs, "Override runs per (dataset, method)");
    bench->add_option("--seed", seed, "Override the seed base");
    bench->add_option("--trials", trials, "Override k-means++ trials");
    bench->add_option("--max-iters", max_iters, "Override the Lloyd iteration cap");
    bench->add_option("--format", format, "text | csv");
    bench->add_flag("--omit-timing", omit_timing, "Leave timing fields empty in CSV output");

    auto* optimal = app.add_subcommand("optimal", "Exact minimum-SSE partition by dynamic programming");
    add_input_flags(optimal);

    CLI11_PARSE(app, argc, argv);

    try {
        if (format != "text" && format != "csv") throw gapk::ParameterError("--format must be text or csv");
        const auto output = format == "csv" ? gapk::OutputFormat::csv : gapk::OutputFormat::text;

        if (cluster->parsed()) {
            gapk::ClusterOptions options;
            options.input = input;
            options.column = column;
            options.format = {parse_delimiter(delimiter), header};
            options.k = k;
            const auto parsed_method = gapk::parse_init_method(method);
            if (!parsed_method) throw gapk::ParameterError("unknown --method '" + method + "'");
            options.init = {*parsed_method, seed, std::nullopt};
            if (cluster->count("--trials") > 0) options.init.trials = trials;
            options.max_iters = max_iters;
            options.output = output;
            gapk::run_cluster(options, std::cout);
            return 0;
        }

        if (optimal->parsed()) {
            if (k < 1) throw gapk::ParameterError("k must be at least 1");
            const auto data = gapk::load_column(input, column, {parse_delimiter(delimiter), header});
            const auto best = gapk::dp_optimal(data, k);
            std::cout << "sse: " << gapk::format_number(best.sse) << '\n'
                      << "sse_normalized: " << gapk::format_number(best.sse_normalized) << '\n'
                      << "breaks:";
            for (const auto b : best.boundaries) std::cout << ' ' << gapk::format_number(data[b]);
            std::cout << '\n';
            return 0;
        }

        auto config = gapk::load_experiment_config(config_path);
        if (bench->count("--runs") > 0) config.runs = runs;
        if (bench->count("--seed") > 0) config.seed_base = seed;
        if (bench->count("--trials") > 0) config.trials = trials;
        if (bench->count("--max-iters") > 0) config.max_iters = max_iters;

        const auto report = gapk::run_benchmark(config);
        for (const auto& w : report.warnings) std::cerr << "warning: " << w << '\n';
        if (output == gapk::OutputFormat::csv) {
            gapk::write_benchmark_csv(report, omit_timing, std::cout);
        } else {
            gapk::write_benchmark_text(report, std::cout);
        }
        for (const auto& f : report.failures) std::cerr << "error: " << f << '\n';
        return report.failures.empty() ? 0 : kExitData;
    } catch (const gapk::ParameterError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParameter;
    } catch (const gapk::DataError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitData;
    }
}
