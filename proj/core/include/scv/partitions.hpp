#pragma once

#include <cstdint>
#include <vector>

namespace scv {

/// Coefficients of prod_{k>=1} (1-q^k)^{-colors} through degree nmax:
/// the number of partitions of n into parts of `colors` colors. colors = 0
/// yields 1, 0, 0, ...
std::vector<std::int64_t> colored_partition_numbers(long colors, long nmax);

}  // namespace scv
