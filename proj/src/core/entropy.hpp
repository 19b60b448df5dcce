#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

namespace infometer::detail {

// sum f*log2(n/f) over the counts. Equal counts are grouped and groups are
// added in ascending order, so the result depends only on the multiset of
// counts: permuting or reversing a pattern cannot change a single bit of it.
// Sorts `counts` in place.
inline double entropy_bits(std::vector<std::size_t>& counts, std::size_t n) {
    if (n == 0) {
        return 0.0;
    }
    std::sort(counts.begin(), counts.end());
    const double nd = static_cast<double>(n);
    double bits = 0.0;
    for (std::size_t i = 0; i < counts.size();) {
        const std::size_t f = counts[i];
        std::size_t j = i;
        while (j < counts.size() && counts[j] == f) {
            ++j;
        }
        if (f != 0) {
            const double fd = static_cast<double>(f);
            bits += static_cast<double>(j - i) * fd * std::log2(nd / fd);
        }
        i = j;
    }
    return bits;
}

} // namespace infometer::detail
