#ifndef GAPK_ERRORS_HPP
#define GAPK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gapk {

// Invalid argument supplied by the caller (bad k, bad sd, bad config value).
class ParameterError : public std::invalid_argument {
public:
    explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

// Input data could not be read or does not satisfy a data invariant.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gapk

#endif  // GAPK_ERRORS_HPP
