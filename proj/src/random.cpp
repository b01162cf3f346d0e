#include "gapk/random.hpp"

namespace gapk {

std::size_t RandomSource::next_index(std::size_t n) {
    const auto idx = static_cast<std::size_t>(next_unit() * static_cast<double>(n));
    return idx < n ? idx : n - 1;
}

double Mt64Source::next_unit() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

}  // namespace gapk
