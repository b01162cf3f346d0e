#include "gapk/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <sstream>
#include <string_view>

#include "gapk/errors.hpp"

namespace gapk {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

class ConfigLine {
public:
    ConfigLine(std::size_t line_no, std::string key, std::string value)
        : line_no_(line_no), key_(std::move(key)), value_(std::move(value)) {}

    [[noreturn]] void fail(const std::string& why) const {
        throw ParameterError("config line " + std::to_string(line_no_) + " (" + key_ + "): " + why);
    }

    template <typename T>
    T number() const {
        T out{};
        const auto* end = value_.data() + value_.size();
        const auto [ptr, ec] = std::from_chars(value_.data(), end, out);
        if (value_.empty() || ec != std::errc{} || ptr != end) fail("expected a number, got '" + value_ + "'");
        return out;
    }

    bool boolean() const {
        if (value_ == "true" || value_ == "yes" || value_ == "1") return true;
        if (value_ == "false" || value_ == "no" || value_ == "0") return false;
        fail("expected true/false, got '" + value_ + "'");
    }

    char delimiter() const {
        if (value_ == "space" || value_ == "whitespace" || value_ == "tab") return ' ';
        if (value_ == "comma") return ',';
        if (value_.size() == 1) return value_[0];
        fail("expected a single delimiter character, 'comma' or 'whitespace'");
    }

    const std::string& value() const { return value_; }

private:
    std::size_t line_no_;
    std::string key_;
    std::string value_;
};

DatasetSpec& dataset_named(ExperimentConfig& config, const std::string& name) {
    for (auto& ds : config.datasets) {
        if (ds.name == name) return ds;
    }
    DatasetSpec ds;
    ds.name = name;
    config.datasets.push_back(std::move(ds));
    return config.datasets.back();
}

void apply_dataset_field(DatasetSpec& ds, const std::string& field, const ConfigLine& line,
                         const std::filesystem::path& base_dir) {
    if (field == "type") {
        const auto& v = line.value();
        if (v == "column") ds.kind = DatasetKind::column;
        else if (v == "density") ds.kind = DatasetKind::density;
        else if (v == "normal") ds.kind = DatasetKind::normal;
        else line.fail("unknown dataset type '" + v + "'");
    } else if (field == "k") {
        ds.k = line.number<std::size_t>();
    } else if (field == "optional") {
        ds.optional = line.boolean();
    } else if (field == "path") {
        const std::filesystem::path p(line.value());
        ds.path = p.is_absolute() || base_dir.empty() ? p : base_dir / p;
    } else if (field == "column") {
        ds.column = line.number<std::size_t>();
    } else if (field == "header") {
        ds.format.skip_header = line.boolean();
    } else if (field == "delimiter") {
        ds.format.delimiter = line.delimiter();
    } else if (field == "population_column") {
        ds.population_column = line.number<std::size_t>();
    } else if (field == "land_column") {
        ds.land_column = line.number<std::size_t>();
    } else if (field == "water_column") {
        ds.water_column = line.number<std::size_t>();
    } else if (field == "n") {
        ds.n = line.number<std::size_t>();
    } else if (field == "mean") {
        ds.mean = line.number<double>();
    } else if (field == "sd") {
        ds.sd = line.number<double>();
    } else if (field == "seed") {
        ds.seed = line.number<std::uint64_t>();
    } else {
        line.fail("unknown dataset field '" + field + "'");
    }
}

void validate(const ExperimentConfig& config) {
    if (config.runs < 1) throw ParameterError("config: runs must be at least 1");
    if (config.max_iters < 1) throw ParameterError("config: max_iters must be at least 1");
    if (config.trials && *config.trials < 1) throw ParameterError("config: trials must be at least 1");
    if (config.methods.empty()) throw ParameterError("config: no methods listed");
    if (config.datasets.empty()) throw ParameterError("config: no datasets listed");
    for (const auto& ds : config.datasets) {
        const std::string where = "config: dataset '" + ds.name + "'";
        if (ds.k < 1) throw ParameterError(where + ": k must be at least 1");
        if (ds.kind == DatasetKind::normal) {
            if (ds.n < 1) throw ParameterError(where + ": n must be at least 1");
            if (!(ds.sd > 0.0)) throw ParameterError(where + ": sd must be positive");
        } else if (ds.path.empty()) {
            throw ParameterError(where + ": path is required");
        }
    }
}

std::string csv_or_empty(std::optional<double> value) {
    return value ? format_number(*value) : std::string{};
}

std::optional<double> safe_reduction(double baseline, double candidate) {
    if (baseline == 0.0) return std::nullopt;
    return reduction_percent(baseline, candidate);
}

const BenchmarkRow* find_row(const BenchmarkReport& report, const std::string& dataset, std::string_view method) {
    for (const auto& row : report.rows) {
        if (row.dataset == dataset && row.method == method) return &row;
    }
    return nullptr;
}

std::vector<std::string> ordered_unique(const std::vector<BenchmarkRow>& rows, std::string BenchmarkRow::*field) {
    std::vector<std::string> out;
    for (const auto& row : rows) {
        if (std::find(out.begin(), out.end(), row.*field) == out.end()) out.push_back(row.*field);
    }
    return out;
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::size_t> widths;
    for (const auto& row : cells) {
        widths.resize(std::max(widths.size(), row.size()), 0);
        for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    for (const auto& row : cells) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c > 0) line += "  ";
            const auto pad = widths[c] - row[c].size();
            line += c == 0 ? row[c] + std::string(pad, ' ') : std::string(pad, ' ') + row[c];
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    }
}

std::string percent(std::optional<double> value) {
    if (!value) return "-";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f%%", *value);
    return buf;
}

}  // namespace

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", value);
    return buf;
}

ExperimentConfig parse_experiment_config(std::istream& in, const std::filesystem::path& base_dir) {
    ExperimentConfig config;
    bool methods_set = false;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view text(raw);
        if (const auto hash = text.find('#'); hash != std::string_view::npos) text = text.substr(0, hash);
        text = trim(text);
        if (text.empty()) continue;
        const auto eq = text.find('=');
        if (eq == std::string_view::npos) {
            throw ParameterError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        const std::string key(trim(text.substr(0, eq)));
        const ConfigLine line(line_no, key, std::string(trim(text.substr(eq + 1))));

        if (key == "runs") {
            config.runs = line.number<std::size_t>();
        } else if (key == "seed") {
            config.seed_base = line.number<std::uint64_t>();
        } else if (key == "trials") {
            config.trials = line.number<std::size_t>();
        } else if (key == "max_iters") {
            config.max_iters = line.number<std::size_t>();
        } else if (key == "methods") {
            config.methods.clear();
            methods_set = true;
            std::stringstream list(line.value());
            std::string item;
            while (std::getline(list, item, ',')) {
                const auto method = parse_init_method(trim(item));
                if (!method) line.fail("unknown method '" + std::string(trim(item)) + "'");
                config.methods.push_back(*method);
            }
        } else if (key.starts_with("dataset.")) {
            const auto dot = key.find('.', 8);
            if (dot == std::string::npos || dot == 8 || dot + 1 == key.size()) {
                line.fail("expected dataset.<name>.<field>");
            }
            apply_dataset_field(dataset_named(config, key.substr(8, dot - 8)), key.substr(dot + 1), line, base_dir);
        } else {
            line.fail("unknown key");
        }
    }
    if (methods_set && config.methods.empty()) throw ParameterError("config: methods list is empty");
    validate(config);
    return config;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("cannot open config '" + path.string() + "'");
    return parse_experiment_config(in, path.parent_path());
}

DataVector load_dataset(const DatasetSpec& spec) {
    switch (spec.kind) {
        case DatasetKind::column:
            return load_column(spec.path, spec.column, spec.format);
        case DatasetKind::density: {
            const auto records = load_census_blocks(spec.path, spec.population_column, spec.land_column,
                                                    spec.water_column, spec.format);
            return derive_density(records, spec.name);
        }
        case DatasetKind::normal:
            return generate_normal(spec.n, spec.mean, spec.sd, spec.seed);
    }
    throw ParameterError("unknown dataset kind");
}

BenchmarkReport run_benchmark(const ExperimentConfig& config) {
    validate(config);
    BenchmarkReport report;
    for (const auto& ds : config.datasets) {
        if (ds.kind != DatasetKind::normal && ds.optional && !std::filesystem::exists(ds.path)) {
            report.warnings.push_back("skipping optional dataset '" + ds.name + "': '" + ds.path.string() +
                                      "' not found");
            continue;
        }
        try {
            const DataVector data = load_dataset(ds);
            std::vector<RunRecord> records;
            std::vector<BenchmarkRow> rows;
            for (const InitMethod method : config.methods) {
                std::vector<std::vector<double>> centers;
                BenchmarkRow row{ds.name, std::string(to_string(method)), ds.k, config.runs};
                for (std::size_t r = 0; r < config.runs; ++r) {
                    InitializerSpec spec{method, config.seed_base + r, config.trials};
                    const TimedRun timed = time_run(data, spec, ds.k, config.max_iters);
                    records.push_back(RunRecord{ds.name, method, ds.k, r, spec.rng_seed,
                                                timed.result.sse_normalized, timed.result.cost_j,
                                                timed.result.iterations, timed.result.converged, timed.timing});
                    centers.push_back(timed.result.centers);
                    row.sse_normalized += timed.result.sse_normalized;
                    row.init_seconds += timed.timing.init_seconds;
                    row.total_seconds += timed.timing.total_seconds;
                }
                const auto runs = static_cast<double>(config.runs);
                row.sse_normalized /= runs;
                row.init_seconds /= runs;
                row.total_seconds /= runs;
                row.center_variance = config.runs >= 2
                                          ? center_variance(std::span<const std::vector<double>>(centers))
                                          : std::numeric_limits<double>::quiet_NaN();
                rows.push_back(std::move(row));
            }
            report.runs.insert(report.runs.end(), records.begin(), records.end());
            report.rows.insert(report.rows.end(), rows.begin(), rows.end());
        } catch (const std::exception& e) {
            report.failures.push_back("dataset '" + ds.name + "': " + e.what());
        }
    }
    return report;
}

void write_benchmark_csv(const BenchmarkReport& report, bool omit_timing, std::ostream& out) {
    auto timing = [&](double seconds) { return omit_timing ? std::string{} : format_number(seconds); };
    out << "dataset,method,k,run,seed,sse_normalized,cost_j,iterations,converged,init_seconds,total_seconds\n";
    for (const auto& r : report.runs) {
        out << r.dataset << ',' << to_string(r.method) << ',' << r.k << ',' << r.run << ',' << r.seed << ','
            << format_number(r.sse_normalized) << ',' << format_number(r.cost_j) << ',' << r.iterations << ','
            << (r.converged ? "true" : "false") << ',' << timing(r.timing.init_seconds) << ','
            << timing(r.timing.total_seconds) << '\n';
    }
    out << '\n';
    out << "dataset,method,k,runs,sse_normalized,sse_reduction_pct,init_seconds,init_reduction_pct,"
           "total_seconds,total_reduction_pct,center_variance,variance_reduction_pct\n";
    for (const auto& row : report.rows) {
        const BenchmarkRow* gap = row.method == "gap" ? nullptr : find_row(report, row.dataset, "gap");
        auto reduction = [&](double BenchmarkRow::*field) -> std::optional<double> {
            if (gap == nullptr) return std::nullopt;
            return safe_reduction(row.*field, gap->*field);
        };
        const bool has_variance = row.runs >= 2;
        out << row.dataset << ',' << row.method << ',' << row.k << ',' << row.runs << ','
            << format_number(row.sse_normalized) << ',' << csv_or_empty(reduction(&BenchmarkRow::sse_normalized))
            << ',' << timing(row.init_seconds) << ','
            << (omit_timing ? "" : csv_or_empty(reduction(&BenchmarkRow::init_seconds))) << ','
            << timing(row.total_seconds) << ','
            << (omit_timing ? "" : csv_or_empty(reduction(&BenchmarkRow::total_seconds))) << ','
            << (has_variance ? format_number(row.center_variance) : "") << ','
            << (has_variance ? csv_or_empty(reduction(&BenchmarkRow::center_variance)) : "") << '\n';
    }
}

void write_benchmark_text(const BenchmarkReport& report, std::ostream& out) {
    const auto datasets = ordered_unique(report.rows, &BenchmarkRow::dataset);
    const auto methods = ordered_unique(report.rows, &BenchmarkRow::method);
    const bool with_gap = std::find(methods.begin(), methods.end(), "gap") != methods.end();

    auto table = [&](const std::string& title, auto value_of) {
        std::vector<std::vector<std::string>> cells;
        std::vector<std::string> header{"Dataset"};
        for (const auto& m : methods) {
            header.push_back(m);
            if (with_gap && m != "gap") header.push_back("Reduction%");
        }
        cells.push_back(header);
        for (const auto& ds : datasets) {
            std::vector<std::string> line{ds};
            const BenchmarkRow* gap = find_row(report, ds, "gap");
            for (const auto& m : methods) {
                const BenchmarkRow* row = find_row(report, ds, m);
                const std::optional<double> value = row ? value_of(*row) : std::nullopt;
                line.push_back(value ? format_number(*value) : "-");
                if (with_gap && m != "gap") {
                    const std::optional<double> base = gap ? value_of(*gap) : std::nullopt;
                    line.push_back(value && base ? percent(safe_reduction(*value, *base)) : "-");
                }
            }
            cells.push_back(std::move(line));
        }
        out << title << '\n';
        print_table(out, cells);
        out << '\n';
    };

    table("Sum of squared differences to closest center (normalized to data size)",
          [](const BenchmarkRow& r) -> std::optional<double> { return r.sse_normalized; });
    table("Initialization time (seconds, mean per run)",
          [](const BenchmarkRow& r) -> std::optional<double> { return r.init_seconds; });
    table("Total running time (seconds, mean per run)",
          [](const BenchmarkRow& r) -> std::optional<double> { return r.total_seconds; });
    table("Variance of centers over runs, averaged over clusters",
          [](const BenchmarkRow& r) -> std::optional<double> {
              if (r.runs < 2) return std::nullopt;
              return r.center_variance;
          });
}

void run_cluster(const ClusterOptions& options, std::ostream& out) {
    if (options.k < 1) throw ParameterError("k must be at least 1");
    if (options.max_iters < 1) throw ParameterError("max-iters must be at least 1");
    if (options.init.trials && *options.init.trials < 1) throw ParameterError("trials must be at least 1");

    const DataVector data = load_column(options.input, options.column, options.format);
    const SeedResult seeded = seed(data, options.k, options.init);
    const ClusteringResult result = lloyd(data, seeded, options.max_iters);

    const std::size_t k = result.centers.size();
    std::vector<std::size_t> counts(k, 0);
    std::vector<double> lo(k, std::numeric_limits<double>::infinity());
    std::vector<double> hi(k, -std::numeric_limits<double>::infinity());
    const auto values = data.values();
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto j = result.assignment[i];
        ++counts[j];
        lo[j] = std::min(lo[j], values[i]);
        hi[j] = std::max(hi[j], values[i]);
    }

    const std::string method(to_string(options.init.method));
    if (options.output == OutputFormat::csv) {
        out << "cluster,center,min,max,count\n";
        for (std::size_t j = 0; j < k; ++j) {
            out << j << ',' << format_number(result.centers[j]) << ','
                << (counts[j] ? format_number(lo[j]) : "") << ',' << (counts[j] ? format_number(hi[j]) : "")
                << ',' << counts[j] << '\n';
        }
        out << '\n';
        out << "dataset,method,k,n,seed,sse_normalized,cost_j,iterations,converged\n";
        out << data.label() << ',' << method << ',' << k << ',' << data.size() << ','
            << (options.init.method == InitMethod::gap ? std::string{} : std::to_string(options.init.rng_seed))
            << ',' << format_number(result.sse_normalized) << ',' << format_number(result.cost_j) << ','
            << result.iterations << ',' << (result.converged ? "true" : "false") << '\n';
        return;
    }

    out << "dataset: " << data.label() << " (n=" << data.size() << ")\n";
    out << "method: " << method << ", k=" << k;
    if (options.init.method != InitMethod::gap) out << ", seed=" << options.init.rng_seed;
    out << '\n';
    out << "iterations: " << result.iterations << (result.converged ? " (converged)" : " (max_iters reached)")
        << '\n';
    out << "sse_normalized: " << format_number(result.sse_normalized) << '\n';
    out << "cost_j: " << format_number(result.cost_j) << "\n\n";

    std::vector<std::vector<std::string>> cells{{"cluster", "center", "min", "max", "count"}};
    for (std::size_t j = 0; j < k; ++j) {
        cells.push_back({std::to_string(j), format_number(result.centers[j]),
                         counts[j] ? format_number(lo[j]) : "-", counts[j] ? format_number(hi[j]) : "-",
                         std::to_string(counts[j])});
    }
    print_table(out, cells);
}

}  // namespace gapk
