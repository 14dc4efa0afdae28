#include "scv/partitions.hpp"

#include <stdexcept>

namespace scv {

std::vector<std::int64_t> colored_partition_numbers(long colors, long nmax) {
    if (colors < 0 || nmax < 0) throw std::invalid_argument("negative argument");
    std::vector<std::int64_t> series(nmax + 1, 0);
    series[0] = 1;
    // Multiply by 1/(1-q^k) once per color: the running prefix recurrence
    // series[n] += series[n-k] implements the geometric factor exactly.
    for (long k = 1; k <= nmax; ++k)
        for (long c = 0; c < colors; ++c)
            for (long n = k; n <= nmax; ++n) series[n] += series[n - k];
    return series;
}

}  // namespace scv
