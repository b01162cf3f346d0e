#include "gapk/data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <string_view>

#include "gapk/errors.hpp"
#include "gapk/random.hpp"

namespace gapk {

namespace {

std::vector<std::string_view> split_line(std::string_view line, char delimiter) {
    std::vector<std::string_view> cells;
    if (delimiter == ' ') {
        std::size_t pos = 0;
        while (pos < line.size()) {
            pos = line.find_first_not_of(" \t", pos);
            if (pos == std::string_view::npos) break;
            const auto end = std::min(line.find_first_of(" \t", pos), line.size());
            cells.push_back(line.substr(pos, end - pos));
            pos = end;
        }
        return cells;
    }
    std::size_t start = 0;
    while (true) {
        const auto end = line.find(delimiter, start);
        if (end == std::string_view::npos) {
            cells.push_back(line.substr(start));
            return cells;
        }
        cells.push_back(line.substr(start, end - start));
        start = end + 1;
    }
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string cell_location(const std::filesystem::path& path, std::size_t line_no, std::size_t column) {
    return path.string() + ": line " + std::to_string(line_no) + ", column " + std::to_string(column);
}

double parse_cell(std::string_view raw, const std::filesystem::path& path, std::size_t line_no,
                  std::size_t column) {
    const auto cell = trim(raw);
    double value = 0.0;
    const auto* begin = cell.data();
    const auto* end = cell.data() + cell.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (cell.empty() || ec != std::errc{} || ptr != end || !std::isfinite(value)) {
        throw DataError(cell_location(path, line_no, column) + ": cannot parse '" + std::string(cell) +
                        "' as a finite number");
    }
    return value;
}

// Calls fn(line_no, cells) for each non-blank data line.
template <typename Fn>
void for_each_row(const std::filesystem::path& path, const TextFormat& format, Fn&& fn) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open '" + path.string() + "'");
    std::string line;
    std::size_t line_no = 0;
    bool header_pending = format.skip_header;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        if (header_pending) {
            header_pending = false;
            continue;
        }
        fn(line_no, split_line(line, format.delimiter));
    }
    if (in.bad()) throw DataError("read error on '" + path.string() + "'");
}

std::string_view require_cell(const std::vector<std::string_view>& cells, std::size_t column,
                              const std::filesystem::path& path, std::size_t line_no) {
    if (column >= cells.size()) {
        throw DataError(cell_location(path, line_no, column) + ": row has only " +
                        std::to_string(cells.size()) + " columns");
    }
    return cells[column];
}

}  // namespace

DataVector DataVector::from_unsorted(std::vector<double> values, std::string label) {
    if (values.empty()) throw DataError("data set '" + label + "' is empty");
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!std::isfinite(values[i])) {
            throw DataError("data set '" + label + "': value " + std::to_string(i) + " is not finite");
        }
    }
    std::sort(values.begin(), values.end());
    return DataVector(std::move(values), std::move(label));
}

std::size_t DataVector::distinct_count() const noexcept {
    std::size_t count = 1;
    for (std::size_t i = 1; i < values_.size(); ++i) {
        if (values_[i] != values_[i - 1]) ++count;
    }
    return count;
}

DataVector load_column(const std::filesystem::path& path, std::size_t column, const TextFormat& format) {
    std::vector<double> values;
    for_each_row(path, format, [&](std::size_t line_no, const std::vector<std::string_view>& cells) {
        values.push_back(parse_cell(require_cell(cells, column, path, line_no), path, line_no, column));
    });
    if (values.empty()) {
        throw DataError("'" + path.string() + "': no data rows in column " + std::to_string(column));
    }
    return DataVector::from_unsorted(std::move(values),
                                     path.filename().string() + ":" + std::to_string(column));
}

std::vector<CensusBlockRecord> load_census_blocks(const std::filesystem::path& path,
                                                  std::size_t population_column,
                                                  std::size_t land_column,
                                                  std::size_t water_column,
                                                  const TextFormat& format) {
    std::vector<CensusBlockRecord> records;
    for_each_row(path, format, [&](std::size_t line_no, const std::vector<std::string_view>& cells) {
        auto field = [&](std::size_t col) {
            const double v = parse_cell(require_cell(cells, col, path, line_no), path, line_no, col);
            if (v < 0.0) throw DataError(cell_location(path, line_no, col) + ": negative value");
            return v;
        };
        records.push_back({field(population_column), field(land_column), field(water_column)});
    });
    if (records.empty()) throw DataError("'" + path.string() + "': no census block rows");
    return records;
}

DataVector derive_density(std::span<const CensusBlockRecord> records, std::string label) {
    std::vector<double> density;
    density.reserve(records.size());
    std::size_t bad = 0;
    std::size_t first_bad = 0;
    for (std::size_t i = 0; i < records.size(); ++i) {
        const double area = records[i].land_area + records[i].water_area;
        if (!(area > 0.0)) {
            if (bad++ == 0) first_bad = i;
            continue;
        }
        density.push_back(records[i].population / area);
    }
    if (bad > 0) {
        throw DataError("census record " + std::to_string(first_bad) + " has zero total area (" +
                        std::to_string(bad) + " such record" + (bad == 1 ? "" : "s") + ")");
    }
    return DataVector::from_unsorted(std::move(density), std::move(label));
}

DataVector generate_normal(std::size_t n, double mean, double sd, std::uint64_t rng_seed) {
    if (n == 0) throw ParameterError("generate_normal: n must be at least 1");
    if (!(sd > 0.0) || !std::isfinite(sd)) throw ParameterError("generate_normal: sd must be positive");
    if (!std::isfinite(mean)) throw ParameterError("generate_normal: mean must be finite");

    Mt64Source rng(rng_seed);
    std::vector<double> values;
    values.reserve(n);
    while (values.size() < n) {
        const double u1 = 1.0 - rng.next_unit();  // (0, 1]
        const double u2 = rng.next_unit();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        values.push_back(mean + sd * radius * std::cos(angle));
        if (values.size() < n) values.push_back(mean + sd * radius * std::sin(angle));
    }
    return DataVector::from_unsorted(std::move(values), "normal(" + std::to_string(n) + ")");
}

}  // namespace gapk
