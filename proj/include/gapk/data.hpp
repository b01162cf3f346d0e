#ifndef GAPK_DATA_HPP
#define GAPK_DATA_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace gapk {

// One-dimensional sample, always sorted ascending and free of NaN/inf.
// Immutable once built; duplicates are kept.
class DataVector {
public:
    // Sorts `values`; throws DataError if empty or any value is not finite.
    static DataVector from_unsorted(std::vector<double> values, std::string label = {});

    std::span<const double> values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const noexcept { return values_[i]; }
    const std::string& label() const noexcept { return label_; }

    // Number of distinct values (the largest k the gap seed accepts).
    std::size_t distinct_count() const noexcept;

    friend bool operator==(const DataVector&, const DataVector&) = default;

private:
    DataVector(std::vector<double> values, std::string label)
        : values_(std::move(values)), label_(std::move(label)) {}

    std::vector<double> values_;
    std::string label_;
};

struct CensusBlockRecord {
    double population = 0.0;
    double land_area = 0.0;
    double water_area = 0.0;
};

// Delimited-text reader options. A space delimiter splits on any run of
// blanks/tabs; any other character splits on exactly that character.
struct TextFormat {
    char delimiter = ',';
    bool skip_header = false;
};

DataVector load_column(const std::filesystem::path& path, std::size_t column,
                       const TextFormat& format = {});

// Reads population, land and water columns from a census block table.
std::vector<CensusBlockRecord> load_census_blocks(const std::filesystem::path& path,
                                                  std::size_t population_column,
                                                  std::size_t land_column,
                                                  std::size_t water_column,
                                                  const TextFormat& format = {});

// population / (land + water) per block. Any block with zero total area is
// rejected; the message names the first such record and how many there are.
DataVector derive_density(std::span<const CensusBlockRecord> records, std::string label = {});

// n normal draws (Box-Muller over Mt64Source), sorted. Pure in its arguments.
DataVector generate_normal(std::size_t n, double mean, double sd, std::uint64_t rng_seed);

}  // namespace gapk

#endif  // GAPK_DATA_HPP
